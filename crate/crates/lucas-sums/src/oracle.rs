//! Brute-force oracle and the verification sweep.
//!
//! [`brute_sum`] is the ground truth: it walks the recurrence term by term
//! and accumulates with plain integer arithmetic — no closed form, no
//! telescoping, nothing shared with the formulas it is used to judge. The
//! sweep functions replay every closed form in the crate against it over a
//! parameter box and report each comparison.
//!
//! Dependency direction: this module calls the closed-form modules (it has
//! to, to compare them), but no closed-form module calls back into this
//! one, and the oracle values themselves are produced exclusively by
//! recurrence walks.

use std::fmt;

use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use crate::consecutive_sums::{consecutive_sum, consecutive_sum_powerform};
use crate::error::Error;
use crate::sequence_core::{make_params, Kind, SequenceParams};
use crate::stride_sums::{
    fib_luc_weighted_square, fib_luc_weighted_stride2, reverse_weighted_sum, stride_sum,
    StrideQuery,
};
use crate::weighted_sums::{weighted_sum, weighted_sum_powerform};
use crate::ExactInt;

/// Which summation a brute-force request or a sweep cell refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumMode {
    /// `Σ_{i=1..n} T_i`.
    Consecutive,
    /// `Σ_{i=1..n} i·T_i`.
    Weighted,
    /// `Σ_{i=1..n} T_{i·r}` with the recorded stride `r ≥ 1`.
    Stride(u64),
    /// `Σ_{i=1..n} (n - i + 1)·T_i`.
    ReverseWeighted,
    /// `Σ_{i=1..n} i·T_{2i}`.
    WeightedStride2,
    /// `Σ_{i=1..n} i·T_i²`.
    WeightedSquare,
}

impl SumMode {
    /// Short stable label (`stride` carries its `r` separately).
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            SumMode::Consecutive => "consecutive",
            SumMode::Weighted => "weighted",
            SumMode::Stride(_) => "stride",
            SumMode::ReverseWeighted => "reverse",
            SumMode::WeightedStride2 => "weighted-stride2",
            SumMode::WeightedSquare => "weighted-square",
        }
    }

    /// The stride for [`SumMode::Stride`], `None` otherwise.
    #[must_use]
    pub fn stride(self) -> Option<u64> {
        match self {
            SumMode::Stride(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for SumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumMode::Stride(r) => write!(f, "stride(r={r})"),
            other => write!(f, "{}", other.label()),
        }
    }
}

/// Walks the recurrence once, handing `(i, T_i)` for `i = 1..=upto` to the
/// callback.
fn for_each_term(params: SequenceParams, kind: Kind, upto: u64, mut f: impl FnMut(u64, &ExactInt)) {
    let (mut prev, mut curr) = params.seeds(kind);
    for i in 1..=upto {
        f(i, &curr);
        let next = &curr * params.p() - &prev * params.q();
        prev = std::mem::replace(&mut curr, next);
    }
}

/// Computes the requested sum the slow, certain way: one recurrence walk
/// and plain accumulation. `n = 0` gives the empty sum for every mode.
///
/// # Panics
///
/// Panics if `mode` is [`SumMode::Stride`] with `r = 0`.
#[must_use]
pub fn brute_sum(params: SequenceParams, kind: Kind, n: u64, mode: SumMode) -> ExactInt {
    let mut acc = ExactInt::zero();
    match mode {
        SumMode::Consecutive => {
            for_each_term(params, kind, n, |_, t| acc += t);
        }
        SumMode::Weighted => {
            for_each_term(params, kind, n, |i, t| acc += t * i);
        }
        SumMode::Stride(r) => {
            assert!(r >= 1, "stride sums need r >= 1");
            let last = n.checked_mul(r).expect("stride index n·r exceeds u64");
            for_each_term(params, kind, last, |j, t| {
                if j % r == 0 {
                    acc += t;
                }
            });
        }
        SumMode::ReverseWeighted => {
            for_each_term(params, kind, n, |i, t| acc += t * (n - i + 1));
        }
        SumMode::WeightedStride2 => {
            let last = n.checked_mul(2).expect("stride index 2n exceeds u64");
            for_each_term(params, kind, last, |j, t| {
                if j % 2 == 0 {
                    acc += t * (j / 2);
                }
            });
        }
        SumMode::WeightedSquare => {
            for_each_term(params, kind, n, |i, t| acc += t * t * i);
        }
    }
    acc
}

/// Parameter box for a verification sweep. All bounds are inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Smallest `p`.
    pub p_min: i64,
    /// Largest `p`.
    pub p_max: i64,
    /// Smallest `q`.
    pub q_min: i64,
    /// Largest `q`.
    pub q_max: i64,
    /// Largest `n`; every mode sweeps `n = 1..=n_max`.
    pub n_max: u64,
    /// Largest stride; stride cells sweep `r = 1..=r_max`.
    pub r_max: u64,
    /// Leave out degenerate pairs entirely (the default). When `false`,
    /// degenerate pairs are swept too and cells whose hypotheses fail are
    /// counted as skipped.
    pub skip_degenerate: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            p_min: -10,
            p_max: 10,
            q_min: -10,
            q_max: 10,
            n_max: 200,
            r_max: 10,
            skip_degenerate: true,
        }
    }
}

impl OracleConfig {
    /// Box symmetric around zero: `|p| ≤ p_abs`, `|q| ≤ q_abs`.
    #[must_use]
    pub fn symmetric(p_abs: i64, q_abs: i64, n_max: u64, r_max: u64) -> Self {
        OracleConfig {
            p_min: -p_abs,
            p_max: p_abs,
            q_min: -q_abs,
            q_max: q_abs,
            n_max,
            r_max,
            skip_degenerate: true,
        }
    }
}

/// One sweep cell: a closed-form value next to the oracle value it must
/// equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Recurrence coefficient `p`.
    pub p: i64,
    /// Recurrence coefficient `q`.
    pub q: i64,
    /// First or second kind.
    pub kind: Kind,
    /// Which sum the cell checks.
    pub mode: SumMode,
    /// Number of summands.
    pub n: u64,
    /// Which route produced the closed value: the primary closed form, an
    /// alternative power form, the stacked partial-sums route, or the
    /// cross-multiplied misprint law.
    pub route: &'static str,
    /// The closed-form value.
    pub closed_value: ExactInt,
    /// The brute-force value.
    pub oracle_value: ExactInt,
    /// Whether the division witness checked out (trivially true for
    /// division-free forms).
    pub witness_ok: bool,
    /// `witness_ok` and the values agree.
    pub pass: bool,
}

/// Counters from a sweep that was too large to keep every report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    /// Cells evaluated (closed form compared against the oracle).
    pub cells: u64,
    /// Cells that passed.
    pub passes: u64,
    /// Cells that failed (value mismatch or witness violation).
    pub failures: u64,
    /// Cells skipped because the closed form's hypotheses fail there
    /// (`UnsupportedCase` / `ZeroDenominator`).
    pub skipped: u64,
    /// Failures where specifically the division witness was at fault.
    pub witness_violations: u64,
    /// Degenerate parameter pairs excluded wholesale (only when
    /// `skip_degenerate` is set).
    pub degenerate_pairs_excluded: u64,
    /// The first few failing reports, for diagnosis.
    pub sample_failures: Vec<VerificationReport>,
}

impl SweepSummary {
    /// Maximum number of failing reports kept for diagnosis.
    pub const SAMPLE_CAP: usize = 8;

    /// `true` iff nothing failed and no witness was violated.
    #[must_use]
    pub fn all_passed(&self) -> bool {
        self.failures == 0 && self.witness_violations == 0
    }

    fn absorb(&mut self, other: SweepSummary) {
        self.cells += other.cells;
        self.passes += other.passes;
        self.failures += other.failures;
        self.skipped += other.skipped;
        self.witness_violations += other.witness_violations;
        self.degenerate_pairs_excluded += other.degenerate_pairs_excluded;
        for report in other.sample_failures {
            if self.sample_failures.len() < Self::SAMPLE_CAP {
                self.sample_failures.push(report);
            }
        }
    }
}

/// What happened at one sweep cell.
enum CellOutcome {
    Evaluated(VerificationReport),
    Skipped,
}

fn validate(config: &OracleConfig) {
    assert!(
        config.p_min <= config.p_max && config.q_min <= config.q_max,
        "empty parameter range: p in {}..={}, q in {}..={}",
        config.p_min,
        config.p_max,
        config.q_min,
        config.q_max
    );
}

/// The (pair, kind) work units of a sweep, in deterministic order, plus the
/// number of degenerate pairs excluded.
fn units(config: &OracleConfig) -> (Vec<(SequenceParams, Kind)>, u64) {
    let mut list = Vec::new();
    let mut excluded = 0;
    for p in config.p_min..=config.p_max {
        for q in config.q_min..=config.q_max {
            let params = make_params(p, q);
            if config.skip_degenerate && params.is_degenerate() {
                excluded += 1;
                continue;
            }
            list.push((params, Kind::FirstKind));
            list.push((params, Kind::SecondKind));
        }
    }
    (list, excluded)
}

/// Replays every closed form for one `(pair, kind)` unit against streaming
/// oracle accumulators, emitting one [`CellOutcome`] per cell in a fixed
/// order.
fn sweep_unit(
    params: SequenceParams,
    kind: Kind,
    config: &OracleConfig,
    emit: &mut dyn FnMut(CellOutcome),
) {
    let p = params.p();
    let q = params.q();
    let mk = |mode: SumMode,
              n: u64,
              route: &'static str,
              closed_value: ExactInt,
              oracle_value: &ExactInt,
              witness_ok: bool| {
        let pass = witness_ok && closed_value == *oracle_value;
        CellOutcome::Evaluated(VerificationReport {
            p,
            q,
            kind,
            mode,
            n,
            route,
            closed_value,
            oracle_value: oracle_value.clone(),
            witness_ok,
            pass,
        })
    };
    // A hypothesis failure is a skip; an exact-division violation is a
    // failing cell charged to the witness.
    let on_result = |mode: SumMode,
                     n: u64,
                     route: &'static str,
                     result: crate::error::Result<crate::exact::SumResult>,
                     oracle_value: &ExactInt,
                     emit: &mut dyn FnMut(CellOutcome)|
     -> Option<ExactInt> {
        match result {
            Ok(sum) => {
                let witness_ok = sum.verify_witness();
                let value = sum.value.clone();
                emit(mk(mode, n, route, sum.value, oracle_value, witness_ok));
                Some(value)
            }
            Err(Error::UnsupportedCase(_) | Error::ZeroDenominator { .. }) => {
                emit(CellOutcome::Skipped);
                None
            }
            Err(Error::ExactDivisionViolation { .. }) => {
                emit(mk(mode, n, route, ExactInt::zero(), oracle_value, false));
                None
            }
            Err(other) => unreachable!("sum operations cannot return {other:?}"),
        }
    };

    // --- consecutive, weighted, reverse: one streamed pass over n ---
    let (mut prev, mut curr) = params.seeds(kind);
    let mut s_oracle = ExactInt::zero(); // Σ T_i
    let mut w_oracle = ExactInt::zero(); // Σ i·T_i
    let mut rev_oracle = ExactInt::zero(); // Σ (n-i+1)·T_i, via R_n = R_{n-1} + S_n
    let mut stacked_closed = ExactInt::zero(); // Σ_k S_k over *closed* S values
    for n in 1..=config.n_max {
        s_oracle += &curr;
        w_oracle += &curr * n;
        rev_oracle += &s_oracle;

        let s_closed = on_result(
            SumMode::Consecutive,
            n,
            "closed-form",
            consecutive_sum(params, kind, n),
            &s_oracle,
            emit,
        );
        if params.is_pq1() && kind == Kind::FirstKind {
            on_result(
                SumMode::Consecutive,
                n,
                "power-form",
                consecutive_sum_powerform(params, n),
                &s_oracle,
                emit,
            );
        }

        on_result(
            SumMode::Weighted,
            n,
            "closed-form",
            weighted_sum(params, kind, n),
            &w_oracle,
            emit,
        );
        if params.is_pq1() {
            on_result(
                SumMode::Weighted,
                n,
                "power-form",
                weighted_sum_powerform(params, kind, n),
                &w_oracle,
                emit,
            );
        }

        match reverse_weighted_sum(params, kind, n) {
            Ok(value) => emit(mk(
                SumMode::ReverseWeighted,
                n,
                "closed-form",
                value,
                &rev_oracle,
                true,
            )),
            Err(Error::UnsupportedCase(_)) => emit(CellOutcome::Skipped),
            Err(other) => unreachable!("reverse_weighted_sum cannot return {other:?}"),
        }
        // Second route: R_n as a stack of closed consecutive sums.
        match &s_closed {
            Some(s_n) => {
                stacked_closed += s_n;
                emit(mk(
                    SumMode::ReverseWeighted,
                    n,
                    "partial-sums",
                    stacked_closed.clone(),
                    &rev_oracle,
                    true,
                ));
            }
            None => emit(CellOutcome::Skipped),
        }

        let next = &curr * p - &prev * q;
        prev = std::mem::replace(&mut curr, next);
    }

    // --- stride sums: one streamed pass per r ---
    for r in 1..=config.r_max {
        let q_pow_r: ExactInt = Pow::pow(&ExactInt::from(q), r);
        let v_r = crate::sequence_core::term_fast(params, Kind::SecondKind, r);
        let denominator = ExactInt::one() + &q_pow_r - v_r;
        if denominator.is_zero() {
            // Every n is out of hypothesis at this r (always the case on
            // the p - q = 1 line).
            let per_n = if kind == Kind::SecondKind { 2 } else { 1 };
            for _ in 0..config.n_max * per_n {
                emit(CellOutcome::Skipped);
            }
            continue;
        }
        let mut stride_oracle = ExactInt::zero();
        let last = config
            .n_max
            .checked_mul(r)
            .expect("stride index n_max·r exceeds u64");
        let (mut sprev, mut scurr) = params.seeds(kind);
        for j in 1..=last {
            if j % r == 0 {
                let n = j / r;
                stride_oracle += &scurr;
                let query = StrideQuery { params, kind, n, r };
                let result = stride_sum(&query);
                let witness_parts = result.as_ref().ok().map(|sum| {
                    (
                        sum.division_witness.numerator.clone(),
                        sum.division_witness.denominator.clone(),
                    )
                });
                on_result(
                    SumMode::Stride(r),
                    n,
                    "closed-form",
                    result,
                    &stride_oracle,
                    emit,
                );
                if kind == Kind::SecondKind {
                    // The misprint law, cross-multiplied to stay in
                    // integers: (numerator + 2q^r)/den - oracle = 2q^r/den
                    // ⇔ numerator = oracle · den.
                    match witness_parts {
                        Some((numerator, denominator)) => {
                            let product = &stride_oracle * &denominator;
                            emit(mk(
                                SumMode::Stride(r),
                                n,
                                "erratum-law",
                                numerator,
                                &product,
                                true,
                            ));
                        }
                        None => emit(CellOutcome::Skipped),
                    }
                }
            }
            let snext = &scurr * p - &sprev * q;
            sprev = std::mem::replace(&mut scurr, snext);
        }
    }

    // --- Fibonacci/Lucas extras, only at (1, -1) ---
    if p == 1 && q == -1 {
        let mut stride2_oracle = ExactInt::zero();
        let last = config
            .n_max
            .checked_mul(2)
            .expect("stride index 2·n_max exceeds u64");
        let (mut sprev, mut scurr) = params.seeds(kind);
        for j in 1..=last {
            if j % 2 == 0 {
                let n = j / 2;
                stride2_oracle += &scurr * n;
                emit(mk(
                    SumMode::WeightedStride2,
                    n,
                    "closed-form",
                    fib_luc_weighted_stride2(kind, n),
                    &stride2_oracle,
                    true,
                ));
            }
            let snext = &scurr * p - &sprev * q;
            sprev = std::mem::replace(&mut scurr, snext);
        }

        let mut square_oracle = ExactInt::zero();
        let (mut sprev, mut scurr) = params.seeds(kind);
        for n in 1..=config.n_max {
            square_oracle += &scurr * &scurr * n;
            emit(mk(
                SumMode::WeightedSquare,
                n,
                "closed-form",
                fib_luc_weighted_square(kind, n),
                &square_oracle,
                true,
            ));
            let snext = &scurr * p - &sprev * q;
            sprev = std::mem::replace(&mut scurr, snext);
        }
    }
}

/// Runs the sweep and keeps every evaluated cell's report, in a
/// deterministic order (pairs by ascending `p` then `q`, first kind before
/// second, modes in a fixed order, ascending `n`).
///
/// Intended for small configurations; the default full-scale box produces
/// millions of reports, for which [`sweep_summary`] streams instead.
#[must_use]
pub fn sweep(config: &OracleConfig) -> Vec<VerificationReport> {
    validate(config);
    let (unit_list, _excluded) = units(config);
    let per_unit: Vec<Vec<VerificationReport>> = unit_list
        .par_iter()
        .map(|&(params, kind)| {
            let mut reports = Vec::new();
            sweep_unit(params, kind, config, &mut |outcome| {
                if let CellOutcome::Evaluated(report) = outcome {
                    reports.push(report);
                }
            });
            reports
        })
        .collect();
    per_unit.into_iter().flatten().collect()
}

/// Runs the sweep at any scale, streaming each unit and keeping only
/// counters plus a few sample failures. Deterministic: unit order is fixed
/// and counters are merged in that order.
#[must_use]
pub fn sweep_summary(config: &OracleConfig) -> SweepSummary {
    validate(config);
    let (unit_list, excluded) = units(config);
    let locals: Vec<SweepSummary> = unit_list
        .par_iter()
        .map(|&(params, kind)| {
            let mut local = SweepSummary::default();
            sweep_unit(params, kind, config, &mut |outcome| match outcome {
                CellOutcome::Evaluated(report) => {
                    local.cells += 1;
                    if report.pass {
                        local.passes += 1;
                    } else {
                        local.failures += 1;
                        if !report.witness_ok {
                            local.witness_violations += 1;
                        }
                        if local.sample_failures.len() < SweepSummary::SAMPLE_CAP {
                            local.sample_failures.push(report);
                        }
                    }
                }
                CellOutcome::Skipped => local.skipped += 1,
            });
            local
        })
        .collect();
    let mut total = SweepSummary {
        degenerate_pairs_excluded: excluded,
        ..SweepSummary::default()
    };
    for local in locals {
        total.absorb(local);
    }
    total
}
