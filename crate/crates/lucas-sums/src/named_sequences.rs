//! The ten classical named families, their registry metadata, and the
//! family-specific shortcut formulas for weighted sums and for `Ω`/`Ψ`.
//!
//! | name                     | symbol | (p, q)  | kind | OEIS    |
//! |--------------------------|--------|---------|------|---------|
//! | `fibonacci`              | `F`    | (1, -1) | U    | A000045 |
//! | `lucas`                  | `L`    | (1, -1) | V    | A000032 |
//! | `pell`                   | `P`    | (2, -1) | U    | A000129 |
//! | `companion_pell`         | `Q`    | (2, -1) | V    | A002203 |
//! | `balancing`              | `B`    | (6, 1)  | U    | A001109 |
//! | `double_lucas_balancing` | `Ĉ`    | (6, 1)  | V    | A001541 |
//! | `jacobsthal`             | `J`    | (1, -2) | U    | A001045 |
//! | `jacobsthal_lucas`       | `j`    | (1, -2) | V    | A014551 |
//! | `mersenne`               | `M`    | (3, 2)  | U    | A000225 |
//! | `mersenne_lucas`         | `m`    | (3, 2)  | V    | A000051 |
//!
//! The Lucas-balancing numbers `C_n = 1, 3, 17, 99, ...` are *not* a Lucas
//! sequence themselves (their seeds are wrong) but satisfy
//! `C_n = Ĉ_n / 2` exactly; they are modeled as the [`DerivedSequence`]
//! returned by [`lucas_balancing`]. Two neighbouring families worth knowing
//! about, though not registry entries: the half-companion Pell numbers
//! `Q_n / 2 = 1, 1, 3, 7, 17, ...` (A001333), and the observation that
//! `m_n = 2ⁿ + 1` lands on a Fermat number exactly when `n` is a power of
//! two.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::exact_div;
use crate::sequence_core::{make_params, term_fast, Kind, SequenceParams};
use crate::weighted_sums::{choose2, OmegaPsi};
use crate::ExactInt;

/// One registry entry: a named specialization of `U_n(p, q)` or
/// `V_n(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedSequence {
    /// Snake-case identifier used by [`lookup`] and the command line.
    pub name: &'static str,
    /// Conventional one-letter symbol.
    pub symbol: &'static str,
    /// The defining parameter pair.
    pub params: SequenceParams,
    /// Which of the two kinds the family specializes.
    pub kind: Kind,
    /// OEIS identifier for the term sequence.
    pub oeis_id: &'static str,
}

impl NamedSequence {
    /// Evaluates the `n`-th term of the family.
    #[must_use]
    pub fn term(&self, n: u64) -> ExactInt {
        term_fast(self.params, self.kind, n)
    }
}

/// All ten named families, in the conventional order.
#[must_use]
pub fn registry() -> Vec<NamedSequence> {
    let entry = |name, symbol, p, q, kind, oeis_id| NamedSequence {
        name,
        symbol,
        params: make_params(p, q),
        kind,
        oeis_id,
    };
    vec![
        entry("fibonacci", "F", 1, -1, Kind::FirstKind, "A000045"),
        entry("lucas", "L", 1, -1, Kind::SecondKind, "A000032"),
        entry("pell", "P", 2, -1, Kind::FirstKind, "A000129"),
        entry("companion_pell", "Q", 2, -1, Kind::SecondKind, "A002203"),
        entry("balancing", "B", 6, 1, Kind::FirstKind, "A001109"),
        entry(
            "double_lucas_balancing",
            "Ĉ",
            6,
            1,
            Kind::SecondKind,
            "A001541",
        ),
        entry("jacobsthal", "J", 1, -2, Kind::FirstKind, "A001045"),
        entry("jacobsthal_lucas", "j", 1, -2, Kind::SecondKind, "A014551"),
        entry("mersenne", "M", 3, 2, Kind::FirstKind, "A000225"),
        entry("mersenne_lucas", "m", 3, 2, Kind::SecondKind, "A000051"),
    ]
}

/// Finds a registry entry by name.
///
/// # Errors
///
/// [`Error::UnknownSequence`] if the name is not one of the ten families.
pub fn lookup(name: &str) -> Result<NamedSequence> {
    registry()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSequence(name.to_string()))
}

/// A sequence that is not itself a Lucas sequence but is an exact rational
/// multiple of one — here always "half of a registry entry".
#[derive(Clone, Copy, Debug)]
pub struct DerivedSequence {
    /// Snake-case identifier.
    pub name: &'static str,
    /// Conventional symbol.
    pub symbol: &'static str,
    /// The registry entry whose terms are exactly twice this sequence's.
    pub doubled_form: NamedSequence,
}

impl DerivedSequence {
    /// Evaluates the `n`-th term as half the doubled form's term.
    ///
    /// # Errors
    ///
    /// [`Error::ExactDivisionViolation`] if the doubled form produced an
    /// odd term, which would mean the derivation itself is wrong.
    pub fn term(&self, n: u64) -> Result<ExactInt> {
        let doubled = self.doubled_form.term(n);
        let (half, _witness) = exact_div(doubled, ExactInt::from(2))?;
        Ok(half)
    }
}

/// The Lucas-balancing numbers `C_n = 1, 3, 17, 99, 577, ...`, each exactly
/// half the corresponding double Lucas-balancing number `Ĉ_n = V_n(6, 1)`;
/// equivalently `C_n = sqrt(8·B_n² + 1)` over the balancing numbers.
#[must_use]
pub fn lucas_balancing() -> DerivedSequence {
    DerivedSequence {
        name: "lucas_balancing",
        symbol: "C",
        doubled_form: lookup("double_lucas_balancing")
            .expect("the registry always contains double_lucas_balancing"),
    }
}

/// Evaluates `Σ_{i=1..n} i·T_i` for a named family through its
/// family-specific shortcut formula (never through the general machinery,
/// so the two can be compared as independent routes):
///
/// ```text
/// fibonacci:               n·F_{n+2} - F_{n+3} + 2
/// lucas:                   n·L_{n+2} - L_{n+3} + 4
/// pell:                    ((n-1)·P_{n+1} + n·P_n + 1) / 2
/// companion_pell:          ((n-1)·Q_{n+1} + n·Q_n + 2) / 2
/// balancing:               (n·B_{n+1} - (n+1)·B_n) / 4
/// double_lucas_balancing:  (n·Ĉ_{n+1} - (n+1)·Ĉ_n + 2) / 4
/// jacobsthal:              (2n·J_{n+2} - J_{n+3} + 3) / 4
/// jacobsthal_lucas:        (2n·j_{n+2} - j_{n+3} + 7) / 4
/// mersenne:                2^{n+1}·(n-1) + 2 - C(n+1, 2)
/// mersenne_lucas:          2^{n+1}·(n-1) + 2 + C(n+1, 2)
/// ```
///
/// # Errors
///
/// [`Error::UnknownSequence`] for names outside the registry;
/// [`Error::ExactDivisionViolation`] if one of the divisions above ever
/// failed to be exact (a bug signal, not an expected outcome).
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn specialized_weighted_sum(name: &str, n: u64) -> Result<ExactInt> {
    assert!(n >= 1, "specialized_weighted_sum is defined for n >= 1");
    let seq = lookup(name)?;
    let t = |i: u64| seq.term(i);
    let nb = ExactInt::from(n);
    let div = |numerator: ExactInt, denominator: i64| -> Result<ExactInt> {
        let (value, _witness) = exact_div(numerator, ExactInt::from(denominator))?;
        Ok(value)
    };
    match name {
        "fibonacci" => Ok(&nb * t(n + 2) - t(n + 3) + 2),
        "lucas" => Ok(&nb * t(n + 2) - t(n + 3) + 4),
        "pell" => div((&nb - 1) * t(n + 1) + &nb * t(n) + 1, 2),
        "companion_pell" => div((&nb - 1) * t(n + 1) + &nb * t(n) + 2, 2),
        "balancing" => div(&nb * t(n + 1) - (&nb + 1) * t(n), 4),
        "double_lucas_balancing" => div(&nb * t(n + 1) - (&nb + 1) * t(n) + 2, 4),
        "jacobsthal" => div(&nb * 2 * t(n + 2) - t(n + 3) + 3, 4),
        "jacobsthal_lucas" => div(&nb * 2 * t(n + 2) - t(n + 3) + 7, 4),
        "mersenne" => Ok((ExactInt::one() << (n + 1)) * (&nb - 1) + 2 - choose2(n + 1)),
        "mersenne_lucas" => Ok((ExactInt::one() << (n + 1)) * (&nb - 1) + 2 + choose2(n + 1)),
        _ => unreachable!("lookup already validated the name"),
    }
}

/// Evaluates `Σ_{i=1..n} i·C_i` over the Lucas-balancing numbers:
/// `(n·C_{n+1} - (n+1)·C_n + 1) / 4`.
///
/// # Errors
///
/// [`Error::ExactDivisionViolation`] if a supposedly exact division fails
/// (a bug signal).
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn lucas_balancing_weighted_sum(n: u64) -> Result<ExactInt> {
    assert!(n >= 1, "lucas_balancing_weighted_sum is defined for n >= 1");
    let c = lucas_balancing();
    let nb = ExactInt::from(n);
    let numerator = &nb * c.term(n + 1)? - (&nb + 1) * c.term(n)? + 1;
    let (value, _witness) = exact_div(numerator, ExactInt::from(4))?;
    Ok(value)
}

/// Evaluates the correction terms `Ω(n)`, `Ψ(n)` for a named family through
/// family-specific shortcuts (shared by the two families over each
/// parameter pair):
///
/// ```text
/// Fibonacci / Lucas:            Ω = F_{n+3} - 2      Ψ = L_{n+3} - 6
/// Pell / companion Pell:        Ω = 2·P_{n+1} - 2    Ψ = 2·Q_{n+1} - 8
/// balancing / double L-b:       Ω = 4·B_n            Ψ = 4·Ĉ_n
/// Jacobsthal / Jacobsthal–Lucas: Ω = J_{n+3} - 3     Ψ = j_{n+3} - 15
/// ```
///
/// The Pell-family `Ψ` deserves a note: expanding the definition with the
/// Pell recurrence gives `Ψ(n) = Q_{n+1} + 2·Q_n + Q_{n-1} - 8 =
/// 2·Q_{n+1} - 8` — the index on `Q` is `n + 1`, not `n` (at `n = 2`, for
/// instance, the definition evaluates to `20 = 2·Q_3 - 8`, while
/// `2·Q_2 - 8` would give `4`).
///
/// # Errors
///
/// [`Error::UnknownSequence`] for names outside the registry;
/// [`Error::UnsupportedCase`] for the Mersenne family, whose pair `(3, 2)`
/// lies on the line `p - q = 1` where the `Ω`/`Ψ` forms play no role.
///
/// # Panics
///
/// Panics if `n = 0`.
pub fn omega_psi_specialized(name: &str, n: u64) -> Result<OmegaPsi> {
    assert!(n >= 1, "omega_psi_specialized is defined for n >= 1");
    let seq = lookup(name)?;
    let u = |i: u64| term_fast(seq.params, Kind::FirstKind, i);
    let v = |i: u64| term_fast(seq.params, Kind::SecondKind, i);
    match name {
        "fibonacci" | "lucas" => Ok(OmegaPsi {
            omega: u(n + 3) - 2,
            psi: v(n + 3) - 6,
        }),
        "pell" | "companion_pell" => Ok(OmegaPsi {
            omega: u(n + 1) * 2 - 2,
            psi: v(n + 1) * 2 - 8,
        }),
        "balancing" | "double_lucas_balancing" => Ok(OmegaPsi {
            omega: u(n) * 4,
            psi: v(n) * 4,
        }),
        "jacobsthal" | "jacobsthal_lucas" => Ok(OmegaPsi {
            omega: u(n + 3) - 3,
            psi: v(n + 3) - 15,
        }),
        "mersenne" | "mersenne_lucas" => Err(Error::UnsupportedCase(format!(
            "Ω/Ψ belong to the p - q ≠ 1 weighted forms; {name} has p - q = 1, \
             where the weighted sum closes without them"
        ))),
        _ => unreachable!("lookup already validated the name"),
    }
}
