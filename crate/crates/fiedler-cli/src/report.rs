//! JSON report shapes emitted by `analyze` and `oracle`.

use fiedler::join_theory::{Certificate, Check, KJoinDecomposition, Verdict, Witness};
use fiedler::regular::{I2Branch, RegularI2Certificate};
use fiedler::sign_oracle::BisectionReport;
use fiedler::spectra::{DECISION_TOL, GROUP_GAP_TOL, RESIDUAL_TOL, SIGN_TOL};
use serde::Serialize;

#[derive(Serialize)]
pub struct Tolerances {
    pub decision: f64,
    pub sign: f64,
    pub grouping: f64,
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            decision: DECISION_TOL,
            sign: SIGN_TOL,
            grouping: GROUP_GAP_TOL,
            residual: RESIDUAL_TOL,
        }
    }
}

#[derive(Serialize)]
pub struct AlphaReport {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
}

impl From<&Check> for CheckReport {
    fn from(check: &Check) -> Self {
        CheckReport {
            name: check.name.clone(),
            passed: check.passed,
        }
    }
}

#[derive(Serialize)]
pub struct ImbalanceReport {
    /// "0", "1", "2", ">=2" or ">=3".
    pub verdict: String,
    pub witness: Option<Vec<f64>>,
    pub checks: Vec<CheckReport>,
}

#[derive(Serialize)]
pub struct KJoinReport {
    pub k: usize,
    pub ell: usize,
    pub elementary_orders: Vec<usize>,
    pub elementary_vertices: Vec<Vec<usize>>,
    pub combined_vertices: Option<Vec<usize>>,
    pub c: Vec<usize>,
    pub c_max: usize,
    pub q: usize,
    pub r: usize,
    pub p: usize,
    pub multiplicity_formula: usize,
}

#[derive(Serialize)]
pub struct RegularReport {
    pub degree: usize,
    pub imbalance_two: bool,
    pub branch: Option<String>,
    pub witness_component: Option<Vec<usize>>,
    pub induced_four_cycle: Option<[usize; 4]>,
    pub mu_min_complement: f64,
    pub checks: Vec<CheckReport>,
}

#[derive(Serialize)]
pub struct BisectionSummary {
    pub minus: usize,
    pub zero: usize,
    pub plus: usize,
    pub cut_edges: usize,
    pub balance_ratio: f64,
    pub witness: Vec<f64>,
}

impl From<&BisectionReport> for BisectionSummary {
    fn from(r: &BisectionReport) -> Self {
        BisectionSummary {
            minus: r.minus,
            zero: r.zero,
            plus: r.plus,
            cut_edges: r.cut_edges,
            balance_ratio: r.balance_ratio,
            witness: r.witness.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ThreeEigsReport {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub alpha: usize,
    pub multiplicity: usize,
    pub clique_number: usize,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub regular_degree: Option<usize>,
    pub tolerances: Tolerances,
    pub alpha: AlphaReport,
    pub imbalance: ImbalanceReport,
    pub kjoin: Option<KJoinReport>,
    pub three_eigenvalues: Option<ThreeEigsReport>,
    /// "largest-n" for recognized forms, "non-join" for graphs with three
    /// distinct Laplacian eigenvalues whose largest is below n.
    pub three_eigenvalue_status: Option<String>,
    pub regular: Option<RegularReport>,
    pub bisection: Option<BisectionSummary>,
}

pub fn imbalance_report(cert: &Certificate, verdict: String) -> ImbalanceReport {
    let witness = match &cert.witness {
        Witness::Vector(x) => Some(x.clone()),
        _ => None,
    };
    ImbalanceReport {
        verdict,
        witness,
        checks: cert.checks.iter().map(CheckReport::from).collect(),
    }
}

pub fn verdict_string(verdict: Verdict, regular_two: Option<bool>) -> String {
    match verdict {
        Verdict::ImbalanceZero => "0".into(),
        Verdict::ImbalanceOne => "1".into(),
        Verdict::ImbalanceAtLeastTwo => match regular_two {
            Some(true) => "2".into(),
            Some(false) => ">=3".into(),
            None => ">=2".into(),
        },
        Verdict::Extreme | Verdict::NotExtreme => unreachable!("not an imbalance verdict"),
    }
}

pub fn kjoin_report(d: &KJoinDecomposition, multiplicity_formula: usize) -> KJoinReport {
    KJoinReport {
        k: d.k,
        ell: d.ell,
        elementary_orders: d.elementary.iter().map(|g| g.n()).collect(),
        elementary_vertices: d
            .elementary_vertices
            .iter()
            .map(|s| s.iter().collect())
            .collect(),
        combined_vertices: d.combined_vertices.as_ref().map(|s| s.iter().collect()),
        c: d.c.clone(),
        c_max: d.c_max,
        q: d.q,
        r: d.r,
        p: d.p,
        multiplicity_formula,
    }
}

pub fn regular_report(degree: usize, cert: &RegularI2Certificate) -> RegularReport {
    let (branch, cycle) = match &cert.branch {
        Some(I2Branch::FiveCycle) => (Some("five-cycle".to_string()), None),
        Some(I2Branch::FourCycle { cycle }) => (Some("four-cycle".to_string()), Some(*cycle)),
        None => (None, None),
    };
    RegularReport {
        degree,
        imbalance_two: cert.yes,
        branch,
        witness_component: cert.component.as_ref().map(|s| s.iter().collect()),
        induced_four_cycle: cycle,
        mu_min_complement: cert.mu_min,
        checks: cert.checks.iter().map(CheckReport::from).collect(),
    }
}

#[derive(Serialize)]
pub struct OracleReport {
    pub graph6: String,
    pub matrix: String,
    pub eigenvalue: f64,
    pub dimension: usize,
    pub exact: bool,
    pub pattern_count: usize,
    pub min_imbalance: usize,
    pub witness: Vec<f64>,
    pub achievable_imbalances: Vec<usize>,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}
