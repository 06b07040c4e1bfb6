//! Per-graph report assembly: structural flags, the contraction search,
//! quadraticity verdicts by both methods, a bounded sweep over replication
//! graphs, and consistency checks that tie the observations to the proven
//! implications between them.

use serde::Serialize;
use stabring::coloring::{all_kempe_equivalent, enumerate_colorings, kempe_classes};
use stabring::structure::{
    even_contractile_sequence, everett_reed_class, is_perfectly_contractile,
    validate_class_report, validate_contraction_sequence, ContractileOutcome, Decision,
};
use stabring::toric::{
    is_quadratic_fiber, is_quadratic_kempe, stable_sets, QuadStatus, QuadraticityVerdict,
    StableFamily,
};
use stabring::{replication, to_graph6, Graph};

pub const SCHEMA: u32 = 1;

/// Vertex count above which the replication sweep is not attempted.
const SWEEP_MAX_N: usize = 12;

#[derive(Clone, Copy)]
pub struct RunConfig {
    /// Overrides the per-graph default (n+1 when perfect, otherwise 6).
    pub degree_bound: Option<usize>,
    /// Node budget for contraction searches and cap on enumerated colorings.
    pub budget: usize,
}

pub fn default_degree_bound(n: usize, perfect: bool) -> usize {
    if perfect {
        (n + 1).max(3)
    } else {
        6
    }
}

#[derive(Serialize)]
pub struct Flags {
    pub perfect: bool,
    pub weakly_chordal: bool,
    pub meyniel: bool,
    pub dart_free: bool,
    pub even_prism_free: bool,
    pub odd_prism_free: bool,
    pub perfectly_orderable: bool,
    pub everett_reed: bool,
}

impl Flags {
    /// Membership in any class with a proven quadraticity guarantee.
    pub fn guaranteed_quadratic(&self) -> bool {
        (self.everett_reed && (self.dart_free || self.even_prism_free))
            || self.weakly_chordal
            || self.meyniel
            || self.perfectly_orderable
    }
}

#[derive(Serialize)]
pub struct WitnessReport {
    pub degree: usize,
    pub lhs: Vec<Vec<usize>>,
    pub rhs: Vec<Vec<usize>>,
    pub multidegree: Vec<usize>,
    pub text: String,
}

#[derive(Serialize)]
pub struct MethodReport {
    pub method: &'static str,
    pub status: &'static str,
    pub witness: Option<WitnessReport>,
}

#[derive(Serialize)]
pub struct QuadReport {
    pub degree_bound: usize,
    /// True when the bound provably suffices to settle quadraticity.
    pub decision_complete: bool,
    pub fiber: MethodReport,
    pub kempe: MethodReport,
}

#[derive(Serialize)]
pub struct ReplicationCounterexample {
    pub weights: Vec<usize>,
    pub k: usize,
    pub classes: usize,
}

#[derive(Serialize)]
pub struct ReplicationReport {
    /// No tested replication graph split into several Kempe classes.
    pub holds: bool,
    /// The whole weight grid was covered with nothing skipped.
    pub complete: bool,
    pub tested: usize,
    pub skipped: usize,
    pub counterexample: Option<ReplicationCounterexample>,
}

#[derive(Serialize)]
pub struct Consistency {
    pub ok: bool,
    pub violations: Vec<String>,
}

#[derive(Serialize)]
pub struct Row {
    pub schema: u32,
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub chromatic_number: usize,
    pub clique_number: usize,
    pub flags: Flags,
    pub even_contractile: &'static str,
    pub contraction_pairs: Option<Vec<(usize, usize)>>,
    pub perfectly_contractile: Option<bool>,
    pub quadratic: QuadReport,
    pub kempe_replication: ReplicationReport,
    pub consistency: Consistency,
}

pub fn status_str(s: QuadStatus) -> &'static str {
    match s {
        QuadStatus::NonQuadratic => "non_quadratic",
        QuadStatus::QuadraticUpToBounds => "quadratic_up_to_bounds",
    }
}

pub fn witness_report(fam: &StableFamily, v: &QuadraticityVerdict) -> Option<WitnessReport> {
    v.witness.as_ref().map(|b| WitnessReport {
        degree: b.lhs.degree(),
        lhs: b.lhs.factors().iter().map(|&f| fam.set(f as usize)).collect(),
        rhs: b.rhs.factors().iter().map(|&f| fam.set(f as usize)).collect(),
        multidegree: b.lhs.multidegree(fam),
        text: b.render(fam),
    })
}

pub fn method_report(fam: &StableFamily, v: &QuadraticityVerdict) -> MethodReport {
    MethodReport {
        method: v.method.as_str(),
        status: status_str(v.status),
        witness: witness_report(fam, v),
    }
}

/// Counts colorings while draining the shared pool; every materialized
/// coloring costs one unit, and a fiber larger than what remains returns
/// None with the pool empty.
fn count_colorings_within(g: &Graph, k: usize, remaining: &mut usize) -> Option<usize> {
    let mut count = 0usize;
    for _ in enumerate_colorings(g, k) {
        if *remaining == 0 {
            return None;
        }
        *remaining -= 1;
        count += 1;
    }
    Some(count)
}

/// All-Kempe-equivalence against the shared pool; None when the colorings
/// outnumber the remaining budget.
fn equivalence_within_budget(g: &Graph, k: usize, remaining: &mut usize) -> Option<bool> {
    match count_colorings_within(g, k, remaining)? {
        0 | 1 => Some(true),
        _ => Some(all_kempe_equivalent(g, k)),
    }
}

/// All nonzero weight vectors in {0,1,2}^n, smallest replication graphs
/// first (total copy count, then lexicographic). Cheap fibers run before
/// the budget pool drains on doubled near-full supports.
fn sweep_weights(n: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::with_capacity(3usize.pow(n as u32) - 1);
    let mut weights = vec![0usize; n];
    'odometer: loop {
        let mut pos = n;
        loop {
            if pos == 0 {
                break 'odometer;
            }
            pos -= 1;
            if weights[pos] < 2 {
                weights[pos] += 1;
                break;
            }
            weights[pos] = 0;
        }
        all.push(weights.clone());
    }
    all.sort_by_key(|w| (w.iter().sum::<usize>(), w.clone()));
    all
}

/// Tests whether all colorings of each replication graph are Kempe
/// equivalent at k = chromatic number and one above, over {0,1,2}^n weight
/// vectors. The budget is a shared pool of colorings materialized across
/// the whole sweep; stops at the first counterexample.
fn replication_sweep(g: &Graph, budget: usize) -> ReplicationReport {
    let n = g.n();
    let mut out = ReplicationReport {
        holds: true,
        complete: false,
        tested: 0,
        skipped: 0,
        counterexample: None,
    };
    if n > SWEEP_MAX_N {
        return out;
    }
    let order = sweep_weights(n);
    let mut remaining = budget;
    let mut stopped_early = false;
    'sweep: for (idx, weights) in order.iter().enumerate() {
        if remaining == 0 {
            // Every nonempty replication graph has at least one coloring at
            // k >= chi, so nothing further can be tested.
            out.skipped += 2 * (order.len() - idx);
            break;
        }
        let rep = replication(g, weights).expect("sweep weights stay in range");
        let h = &rep.graph;
        let chi = h.chromatic_number();
        for k in chi..=chi + 1 {
            match equivalence_within_budget(h, k, &mut remaining) {
                None => out.skipped += 1,
                Some(true) => out.tested += 1,
                Some(false) => {
                    out.tested += 1;
                    out.holds = false;
                    out.counterexample = Some(ReplicationCounterexample {
                        weights: weights.clone(),
                        k,
                        classes: kempe_classes(h, k).class_count,
                    });
                    stopped_early = true;
                    break 'sweep;
                }
            }
        }
    }
    out.complete = !stopped_early && out.skipped == 0;
    out
}

pub fn analyze(g: &Graph, cfg: &RunConfig) -> Result<Row, String> {
    let n = g.n();
    let mut violations: Vec<String> = Vec::new();

    let class = everett_reed_class(g);
    if let Err(e) = validate_class_report(g, &class) {
        violations.push(format!("witness_validation_failed: {e}"));
    }
    let flags = Flags {
        perfect: class.perfect,
        weakly_chordal: class.weakly_chordal,
        meyniel: class.meyniel,
        dart_free: class.dart_free,
        even_prism_free: class.even_prism_free,
        odd_prism_free: class.odd_prism_free,
        perfectly_orderable: class.perfectly_orderable.is_some(),
        everett_reed: class.everett_reed,
    };
    let chromatic = g.chromatic_number();
    let clique = g.clique_number();

    let contraction = even_contractile_sequence(g, cfg.budget);
    let (even_contractile, contraction_pairs) = match &contraction {
        ContractileOutcome::Found(seq) => {
            if let Err(e) = validate_contraction_sequence(g, seq) {
                violations.push(format!("contraction_replay_failed: {e}"));
            }
            if seq.final_graph.n() != chromatic || chromatic != clique {
                violations.push("contractile_chi_omega".into());
            }
            for k in [chromatic.max(1), chromatic.max(1) + 1] {
                let mut pool = cfg.budget;
                if let Some(false) = equivalence_within_budget(g, k, &mut pool) {
                    violations.push(format!("contractile_kempe_split_at_k_{k}"));
                }
            }
            ("found", Some(seq.pairs()))
        }
        ContractileOutcome::Absent => ("absent", None),
        ContractileOutcome::OutOfBudget => ("out_of_budget", None),
    };

    let perfectly_contractile = match is_perfectly_contractile(g, cfg.budget) {
        Decision::Yes => Some(true),
        Decision::No => Some(false),
        Decision::OutOfBudget => None,
    };
    if perfectly_contractile == Some(true) && !flags.everett_reed {
        violations.push("contractile_with_forbidden_subgraph".into());
    }
    if perfectly_contractile == Some(false) && flags.guaranteed_quadratic() {
        violations.push("guaranteed_class_not_contractile".into());
    }

    let degree_bound = cfg
        .degree_bound
        .unwrap_or_else(|| default_degree_bound(n, flags.perfect));
    let fam = stable_sets(g);
    let fiber = is_quadratic_fiber(g, degree_bound).map_err(|e| e.to_string())?;
    let kempe = is_quadratic_kempe(g, degree_bound).map_err(|e| e.to_string())?;
    if fiber.status != kempe.status
        || witness_text(&fam, &fiber) != witness_text(&fam, &kempe)
    {
        violations.push("method_disagreement".into());
    }
    let status = fiber.status;
    let decision_complete = flags.perfect && degree_bound >= n + 1;

    if status == QuadStatus::NonQuadratic && flags.guaranteed_quadratic() {
        violations.push("guaranteed_class_nonquadratic".into());
    }
    if status == QuadStatus::QuadraticUpToBounds
        && decision_complete
        && !flags.everett_reed
    {
        violations.push("complete_quadratic_with_forbidden_subgraph".into());
    }

    // A non-quadraticity witness asserts that some replication graph has
    // inequivalent colorings; re-test that assertion directly.
    if let Some(b) = &fiber.witness {
        let a = b.lhs.multidegree(&fam);
        let k = b.lhs.degree();
        if let Ok(rep) = replication(g, &a) {
            let mut pool = cfg.budget;
            if let Some(true) = equivalence_within_budget(&rep.graph, k, &mut pool) {
                violations.push("witness_vs_replication_equivalence".into());
            }
        }
    }

    let kempe_replication = replication_sweep(g, cfg.budget);
    if let Some(ce) = &kempe_replication.counterexample {
        if ce.k >= 3 && ce.k <= degree_bound && status == QuadStatus::QuadraticUpToBounds {
            violations.push("replication_counterexample_vs_quadratic".into());
        }
    }

    let ok = violations.is_empty();
    Ok(Row {
        schema: SCHEMA,
        graph: to_graph6(g),
        n,
        edges: g.edge_count(),
        chromatic_number: chromatic,
        clique_number: clique,
        flags,
        even_contractile,
        contraction_pairs,
        perfectly_contractile,
        quadratic: QuadReport {
            degree_bound,
            decision_complete,
            fiber: method_report(&fam, &fiber),
            kempe: method_report(&fam, &kempe),
        },
        kempe_replication,
        consistency: Consistency { ok, violations },
    })
}

fn witness_text(fam: &StableFamily, v: &QuadraticityVerdict) -> Option<String> {
    v.witness.as_ref().map(|b| b.render(fam))
}

/// Flat record for CSV output, one column per scalar field.
pub fn csv_record(row: &Row) -> Vec<String> {
    let b = |v: bool| v.to_string();
    vec![
        row.graph.clone(),
        row.n.to_string(),
        row.edges.to_string(),
        row.chromatic_number.to_string(),
        row.clique_number.to_string(),
        b(row.flags.perfect),
        b(row.flags.weakly_chordal),
        b(row.flags.meyniel),
        b(row.flags.dart_free),
        b(row.flags.even_prism_free),
        b(row.flags.odd_prism_free),
        b(row.flags.perfectly_orderable),
        b(row.flags.everett_reed),
        row.even_contractile.to_string(),
        row.contraction_pairs
            .as_ref()
            .map(|p| p.len().to_string())
            .unwrap_or_default(),
        row.perfectly_contractile
            .map(|v| v.to_string())
            .unwrap_or_else(|| "unknown".into()),
        row.quadratic.degree_bound.to_string(),
        b(row.quadratic.decision_complete),
        row.quadratic.fiber.status.to_string(),
        row.quadratic.kempe.status.to_string(),
        row.quadratic
            .fiber
            .witness
            .as_ref()
            .map(|w| w.text.clone())
            .unwrap_or_default(),
        b(row.kempe_replication.holds),
        b(row.kempe_replication.complete),
        row.kempe_replication.tested.to_string(),
        row.kempe_replication.skipped.to_string(),
        b(row.consistency.ok),
        row.consistency.violations.join("; "),
    ]
}

pub const CSV_HEADER: [&str; 27] = [
    "graph",
    "n",
    "edges",
    "chromatic",
    "clique",
    "perfect",
    "weakly_chordal",
    "meyniel",
    "dart_free",
    "even_prism_free",
    "odd_prism_free",
    "perfectly_orderable",
    "everett_reed",
    "even_contractile",
    "contraction_steps",
    "perfectly_contractile",
    "degree_bound",
    "decision_complete",
    "fiber_status",
    "kempe_status",
    "witness",
    "replication_holds",
    "replication_complete",
    "replication_tested",
    "replication_skipped",
    "consistency_ok",
    "violations",
];
