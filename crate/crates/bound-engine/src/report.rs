use num_bigint::BigInt;
use num_traits::Zero;

use merca_series::{build_series, scan, Case, DenomKind, MercaParams, ScanReport};

use crate::poly::{Family, PolyId};
use crate::roots::RootBracket;
use crate::threshold::{compute_l, corollary_k_threshold, refined_k_threshold, stage2_constants, PFloorPolicy, Stage2};
use crate::BoundError;

/// Outcome of the three-case algorithm for one `(r, s, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `k` is at or beyond the corollary threshold.
    CertifiedByCorollary,
    /// The case series is nonnegative on `[0, L]` and the bound theorem covers
    /// every `n ≥ L`.
    CertifiedByScan,
    /// The case series has a negative coefficient below `L` (inconclusive for
    /// the full series; stage 2 applies).
    CaseSeriesNegative,
    /// `L` exceeds the scan budget; stage 2 applies.
    BudgetExceeded,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::CertifiedByCorollary => "certified_by_corollary",
            Verdict::CertifiedByScan => "certified_by_scan",
            Verdict::CaseSeriesNegative => "case_series_negative",
            Verdict::BudgetExceeded => "budget_exceeded",
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(self, Verdict::CertifiedByCorollary | Verdict::CertifiedByScan)
    }
}

/// Everything the algorithm computed for one parameter triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub params: MercaParams,
    pub case: Case,
    pub family: Family,
    pub poly_roots: Vec<(PolyId, Option<RootBracket>)>,
    /// Bracket of the block variable; `L` is evaluated at its upper end.
    pub z0: RootBracket,
    pub p_floor: BigInt,
    pub l: BigInt,
    /// Block-aligned threshold `(p_floor+k)(2·p_floor·r − r + 2s)`, clamped at 0.
    pub l_block: BigInt,
    /// Stage-2 constants, computed only when the scan does not certify.
    pub stage2: Option<Stage2>,
    pub corollary_k: BigInt,
    /// `None` outside CASE2/CASE3.
    pub refined_k: Option<u64>,
    /// Series scanned on `[0, min(L, budget)]`.
    pub scanned_series: DenomKind,
    /// `None` when the scan was skipped (`L = 0`, or certified by corollary).
    pub scan: Option<ScanReport>,
    /// Scan of the full conjecture series to the budget, run when the
    /// algorithm does not certify, as evidence below `N`.
    pub full_scan: Option<ScanReport>,
    pub verdict: Verdict,
}

/// Finite-denominator series whose bound theorem the case uses.
pub fn case_series(case: Case) -> DenomKind {
    match case {
        Case::Case1 => DenomKind::Four,
        Case::Case2 => DenomKind::ThreePlus,
        Case::Case3 | Case::SpecialR2S => DenomKind::ThreeMinus,
    }
}

/// Runs the three-case algorithm: compute `L`; if `L` fits the budget, scan
/// the case series on `[0, L]` (nonnegative there and beyond `L` ⇒ the full
/// series, its product with a nonnegative tail, is nonnegative); otherwise
/// report the stage-2 bound `N` with a scan of the full series to the budget.
pub fn run_algorithm(
    params: &MercaParams,
    scan_budget: usize,
    policy: PFloorPolicy,
) -> Result<BoundReport, BoundError> {
    let case = params.case();
    let (l, detail) = compute_l(params)?;
    let corollary_k = corollary_k_threshold(params);
    let refined_k = match case {
        Case::Case2 | Case::Case3 => Some(refined_k_threshold(params.r(), params.s())?),
        _ => None,
    };
    let scanned_series = case_series(case);
    let by_corollary = BigInt::from(params.k()) >= corollary_k;
    let (scan_report, verdict) = if by_corollary {
        (None, Verdict::CertifiedByCorollary)
    } else if l.is_zero() {
        (None, Verdict::CertifiedByScan)
    } else {
        let fits = l <= BigInt::from(scan_budget);
        let hi = if fits { usize::try_from(&l).expect("fits the budget") } else { scan_budget };
        let series = build_series(params, hi, scanned_series)?;
        let report = scan(&series, 0, hi)?;
        let verdict = match (report.is_nonnegative(), fits) {
            (false, _) => Verdict::CaseSeriesNegative,
            (true, true) => Verdict::CertifiedByScan,
            (true, false) => Verdict::BudgetExceeded,
        };
        (Some(report), verdict)
    };
    let (stage2, full_scan) = if verdict.is_certified() {
        (None, None)
    } else {
        let full = build_series(params, scan_budget, DenomKind::Full)?;
        (Some(stage2_constants(params, policy)), Some(scan(&full, 0, scan_budget)?))
    };
    Ok(BoundReport {
        params: *params,
        case,
        family: detail.family,
        poly_roots: detail.roots,
        z0: detail.z0,
        p_floor: detail.p_floor,
        l,
        l_block: detail.l_block,
        stage2,
        corollary_k,
        refined_k,
        scanned_series,
        scan: scan_report,
        full_scan,
        verdict,
    })
}
