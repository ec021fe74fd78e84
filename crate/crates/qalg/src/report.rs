//! Verification reports: run the check groups an algebra supports, collect
//! one line per certified identity, and render the result as text or JSON.
//!
//! Report schema (JSON): `{ tool_version, algebra, truncation_order,
//! overall, items: [{ check, subject, status, residual?, wall_ms? }] }`.
//! `status` is `"pass"`, `"fail"` or `"diverged"`; `residual` is the exact
//! printed witness and appears only on non-passing items; `wall_ms` is the
//! wall time of the check group the item belongs to (each group is measured
//! once and the time is shared by its items), omitted under deterministic
//! output. Items are ordered by check group, then by the order the group
//! emits them (PBW rank order); identical invocations produce identical
//! reports.

use rayon::prelude::*;
use serde::Serialize;

use crate::contraction::{schouten_square, StructureConstants, WedgePair};
use crate::hopf::{
    check_antipode, check_coassociativity, check_coproduct_homomorphism, check_counit,
    check_hopf_subalgebra, check_intertwining, check_qybe, HopfClosureReport, HopfSpec,
};
use crate::ncalgebra::{check_jacobi, subalgebra_closure};
use crate::realization::{check_realization, check_solution_transport, check_symmetry};
use crate::registry::{AlgebraBundle, CheckKind, SubalgebraExpectation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Diverged,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Diverged => "DIVERGED",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportItem {
    pub check: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl ReportItem {
    pub fn new(check: &str, subject: impl Into<String>, ok: bool, witness: String) -> Self {
        ReportItem {
            check: check.to_string(),
            subject: subject.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual: (!ok).then_some(witness),
            wall_ms: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub algebra: String,
    pub truncation_order: u32,
    pub overall: Status,
    pub items: Vec<ReportItem>,
}

impl VerificationReport {
    pub fn assemble(algebra: &str, order: u32, items: Vec<ReportItem>) -> Self {
        let overall = if items.iter().all(|i| i.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            algebra: algebra.to_string(),
            truncation_order: order,
            overall,
            items,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "algebra: {}\norder:   {} (identities certified mod tau^{})\ntool:    qalg {}\n\n",
            self.algebra,
            self.truncation_order,
            self.truncation_order + 1,
            self.tool_version
        ));
        let check_w = self.items.iter().map(|i| i.check.len()).max().unwrap_or(0).max(5);
        let subj_w = self.items.iter().map(|i| i.subject.len()).max().unwrap_or(0).max(7);
        for item in &self.items {
            out.push_str(&format!(
                "  {:check_w$}  {:subj_w$}  {}",
                item.check,
                item.subject,
                item.status.label()
            ));
            if let Some(ms) = item.wall_ms {
                out.push_str(&format!("  [{ms} ms]"));
            }
            out.push('\n');
            if let Some(residual) = &item.residual {
                out.push_str(&format!("      witness: {residual}\n"));
            }
        }
        let failed = self.items.iter().filter(|i| i.status != Status::Pass).count();
        out.push_str(&format!(
            "\noverall: {} ({} checks, {} failed)\n",
            self.status_word(),
            self.items.len(),
            failed
        ));
        out
    }

    fn status_word(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "FAIL"
        }
    }
}

/// Knobs for one verification run.
pub struct RunConfig {
    /// Worker threads for independent check groups; 1 runs them inline.
    pub jobs: usize,
    /// Record group wall times on the items.
    pub timing: bool,
    /// Hopf structure rebuilt at the (possibly lower) QYBE order, when the
    /// R-matrix group is going to run. The cube check costs an order of
    /// magnitude more than everything else, so it gets its own window.
    pub qybe_hopf: Option<HopfSpec>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { jobs: 1, timing: false, qybe_hopf: None }
    }
}

/// Run the selected check groups and assemble the report. Check groups are
/// independent; with `jobs > 1` they run on a thread pool and are merged
/// back in fixed group order.
pub fn run_verification(
    bundle: &AlgebraBundle,
    checks: &[CheckKind],
    config: &RunConfig,
) -> VerificationReport {
    let mut order: Vec<CheckKind> = Vec::new();
    for kind in CheckKind::ALL {
        if checks.contains(&kind) && !order.contains(&kind) {
            order.push(kind);
        }
    }

    let run_group = |kind: &CheckKind| -> Vec<ReportItem> {
        let start = std::time::Instant::now();
        let mut items = match kind {
            CheckKind::Jacobi => jacobi_items(bundle),
            CheckKind::Hopf => hopf_items(bundle),
            CheckKind::RMatrix => rmatrix_items(bundle, config.qybe_hopf.as_ref()),
            CheckKind::Realization => realization_items(bundle),
            CheckKind::Symmetry => symmetry_items(bundle),
            CheckKind::Subalgebras => subalgebra_items(bundle),
        };
        if config.timing {
            let ms = start.elapsed().as_millis() as u64;
            for item in &mut items {
                item.wall_ms = Some(ms);
            }
        }
        items
    };

    let groups: Vec<Vec<ReportItem>> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| order.par_iter().map(run_group).collect())
    } else {
        order.iter().map(run_group).collect()
    };

    let items = groups.into_iter().flatten().collect();
    VerificationReport::assemble(&bundle.name, bundle.order(), items)
}

/// A check group that cannot even run (structurally broken input) reports
/// one failing item carrying the error text.
fn error_item(check: &str, err: impl std::fmt::Display) -> Vec<ReportItem> {
    vec![ReportItem::new(check, "(check aborted)", false, err.to_string())]
}

fn jacobi_items(bundle: &AlgebraBundle) -> Vec<ReportItem> {
    let names = bundle.spec.generator_names();
    match check_jacobi(&bundle.spec) {
        Ok(triples) => triples
            .iter()
            .map(|t| {
                ReportItem::new(
                    "jacobi",
                    format!("({}, {}, {})", t.names[0], t.names[1], t.names[2]),
                    t.pass(),
                    t.residual.display(names),
                )
            })
            .collect(),
        Err(e) => error_item("jacobi", e),
    }
}

fn hopf_items(bundle: &AlgebraBundle) -> Vec<ReportItem> {
    let Some(hs) = bundle.hopf.as_ref() else {
        return error_item("hopf", "algebra has no coproduct table");
    };
    let names = bundle.spec.generator_names();
    let mut items = Vec::new();

    match check_coproduct_homomorphism(hs) {
        Ok(pairs) => items.extend(pairs.iter().map(|p| {
            ReportItem::new(
                "hopf.homomorphism",
                format!("Delta[{}, {}]", p.names.0, p.names.1),
                p.pass(),
                p.residual.display(names),
            )
        })),
        Err(e) => return error_item("hopf.homomorphism", e),
    }
    match check_coassociativity(hs) {
        Ok(gens) => items.extend(gens.iter().map(|g| {
            ReportItem::new(
                "hopf.coassociativity",
                format!("Delta({})", g.name),
                g.pass(),
                g.residual.display(names),
            )
        })),
        Err(e) => return error_item("hopf.coassociativity", e),
    }
    items.extend(check_counit(hs).iter().map(|c| {
        ReportItem::new(
            "hopf.counit",
            format!("counit({})", c.name),
            c.pass(),
            format!(
                "left: {}; right: {}",
                c.left_residual.display(names),
                c.right_residual.display(names)
            ),
        )
    }));
    match check_antipode(hs) {
        Ok(gens) => items.extend(gens.iter().map(|a| {
            ReportItem::new(
                "hopf.antipode",
                format!("S({})", a.name),
                a.pass(),
                format!(
                    "left: {}; right: {}",
                    a.left_residual.display(names),
                    a.right_residual.display(names)
                ),
            )
        })),
        Err(e) => return error_item("hopf.antipode", e),
    }
    items
}

fn rmatrix_items(bundle: &AlgebraBundle, qybe_hopf: Option<&HopfSpec>) -> Vec<ReportItem> {
    let names = bundle.spec.generator_names();
    let Some(hs) = bundle.hopf.as_ref() else {
        // Classical algebra: certify the candidate classical r-matrix
        // D wedge H against the structure constants instead.
        return match StructureConstants::extract(&bundle.spec) {
            Ok(f) => {
                let (d, h) = match (bundle.spec.rank_of("D"), bundle.spec.rank_of("H")) {
                    (Some(d), Some(h)) => (d, h),
                    _ => return error_item("rmatrix.schouten", "needs generators D and H"),
                };
                let r = WedgePair::simple(d, h);
                let sq = schouten_square(&f, &r);
                vec![ReportItem::new(
                    "rmatrix.schouten",
                    "[[D wedge H, D wedge H]]",
                    sq.is_zero(),
                    sq.display(names),
                )]
            }
            Err(e) => error_item("rmatrix.schouten", e),
        };
    };

    let mut items = Vec::new();
    match check_intertwining(hs) {
        Ok(gens) => items.extend(gens.iter().map(|c| {
            ReportItem::new(
                "rmatrix.intertwining",
                format!("R Delta({g}) - Delta_op({g}) R", g = c.name),
                c.pass(),
                c.residual.display(names),
            )
        })),
        Err(e) => return error_item("rmatrix.intertwining", e),
    }
    let cube = qybe_hopf.unwrap_or(hs);
    match check_qybe(cube) {
        Ok(residual) => items.push(ReportItem::new(
            "rmatrix.qybe",
            format!("R12 R13 R23 - R23 R13 R12 (mod tau^{})", cube.order() + 1),
            residual.is_zero(),
            residual.display(names),
        )),
        Err(e) => return error_item("rmatrix.qybe", e),
    }
    items
}

fn realization_items(bundle: &AlgebraBundle) -> Vec<ReportItem> {
    let Some(kind) = bundle.realization else {
        return error_item("realization", "algebra has no realized operator table");
    };
    match check_realization(&bundle.spec, kind) {
        Ok(pairs) => pairs
            .iter()
            .map(|p| {
                ReportItem::new(
                    "realization",
                    format!("[T({}), T({})]", p.names.0, p.names.1),
                    p.passed(),
                    p.residual.display(),
                )
            })
            .collect(),
        Err(e) => error_item("realization", e),
    }
}

fn symmetry_items(bundle: &AlgebraBundle) -> Vec<ReportItem> {
    let Some(kind) = bundle.realization else {
        return error_item("symmetry", "algebra has no realized operator table");
    };
    let names = bundle.spec.generator_names();
    let order = bundle.order();
    let mut items = Vec::new();
    match check_symmetry(kind, names, order) {
        Ok(gens) => items.extend(gens.iter().map(|s| {
            ReportItem::new(
                "symmetry",
                format!("[E, T({g})] - Lambda_{g} E", g = s.name),
                s.passed(),
                s.residual.display(),
            )
        })),
        Err(e) => return error_item("symmetry", e),
    }
    match check_solution_transport(kind, names, order) {
        Ok(transports) => items.extend(transports.iter().map(|t| {
            let subject = if t.generator == "(seed)" {
                format!("E({}) = 0", t.solution)
            } else {
                format!("E(T({}) . {}) = 0", t.generator, t.solution)
            };
            ReportItem::new("symmetry.transport", subject, t.passed(), t.residual.display())
        })),
        Err(e) => return error_item("symmetry.transport", e),
    }
    items
}

fn subalgebra_items(bundle: &AlgebraBundle) -> Vec<ReportItem> {
    let names_of = |subset: &[String]| format!("{{{}}}", subset.join(", "));
    let mut items = Vec::new();
    for case in &bundle.subalgebra_cases {
        let label = names_of(&case.subset);
        match case.expect {
            SubalgebraExpectation::Closed => {
                match subalgebra_closure(&bundle.spec, &case.subset) {
                    Ok(report) => {
                        let witness = report
                            .pairs
                            .iter()
                            .find_map(|p| {
                                p.violation.as_ref().map(|v| {
                                    format!("[{}, {}] contains {v}", p.names.0, p.names.1)
                                })
                            })
                            .unwrap_or_default();
                        items.push(ReportItem::new(
                            "subalgebras",
                            format!("{label} closes under the bracket"),
                            report.closed(),
                            witness,
                        ));
                    }
                    Err(e) => items.extend(error_item("subalgebras", e)),
                }
            }
            SubalgebraExpectation::HopfSubalgebra | SubalgebraExpectation::ClosedNotHopf => {
                let Some(hs) = bundle.hopf.as_ref() else {
                    items.extend(error_item("subalgebras", "expected coproduct table"));
                    continue;
                };
                match check_hopf_subalgebra(hs, &case.subset) {
                    Ok(report) => {
                        let is_hopf = report.is_hopf_subalgebra();
                        let closed = report.bracket_violation.is_none();
                        let (subject, ok, witness) = match case.expect {
                            SubalgebraExpectation::HopfSubalgebra => (
                                format!("{label} is a Hopf subalgebra"),
                                is_hopf,
                                describe_escape(&report, bundle),
                            ),
                            _ => (
                                format!("{label} closes, but its coproduct escapes"),
                                closed && !is_hopf,
                                if !closed {
                                    report.bracket_violation.clone().unwrap_or_default()
                                } else {
                                    "coproduct stays inside the span".to_string()
                                },
                            ),
                        };
                        items.push(ReportItem::new("subalgebras", subject, ok, witness));
                    }
                    Err(e) => items.extend(error_item("subalgebras", e)),
                }
            }
        }
    }
    items
}

fn describe_escape(
    report: &HopfClosureReport,
    bundle: &AlgebraBundle,
) -> String {
    if let Some(v) = &report.bracket_violation {
        return v.clone();
    }
    let names = bundle.spec.generator_names();
    for item in &report.items {
        if let Some(t) = &item.coproduct_witness {
            return format!("Delta({}) escapes: {}", item.name, t.display(names));
        }
        if let Some(s) = &item.antipode_witness {
            return format!("S({}) escapes: {}", item.name, s);
        }
    }
    String::new()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::resolve;

    #[test]
    fn classical_report_passes_and_orders_items() {
        let bundle = resolve("so22", 3).unwrap();
        let report =
            run_verification(&bundle, &bundle.applicable_checks(), &RunConfig::default());
        assert!(report.passed());
        // jacobi items come first, then the Schouten item, then realization.
        assert_eq!(report.items[0].check, "jacobi");
        assert!(report.items.iter().any(|i| i.check == "rmatrix.schouten"));
        let text = report.to_text();
        assert!(text.contains("overall: pass"), "{text}");
        assert!(!text.contains("ms]"), "timing suppressed by default: {text}");
    }

    #[test]
    fn deformed_report_passes_in_parallel_and_serializes() {
        let bundle = resolve("uso22", 3).unwrap();
        let config = RunConfig { jobs: 3, timing: false, qybe_hopf: None };
        let report = run_verification(&bundle, &bundle.applicable_checks(), &config);
        assert!(report.passed(), "{}", report.to_text());
        let sequential =
            run_verification(&bundle, &bundle.applicable_checks(), &RunConfig::default());
        assert_eq!(report.to_json(), sequential.to_json());
        let parsed: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(parsed["overall"], "pass");
        assert_eq!(parsed["algebra"], "uso22");
        assert!(parsed["items"].as_array().unwrap().len() > 40);
    }

    #[test]
    fn corrupted_table_fails_with_named_subject() {
        use crate::ncalgebra::SpecBuilder;
        let mut b = SpecBuilder::new("broken", &["A", "B", "C"], 2).unwrap();
        let a = b.gen("A");
        let c = b.gen("C");
        // [B,A] = C with [C,A] = A violates Jacobi: the cyclic sum is -C.
        b.set_bracket("B", "A", c.clone()).unwrap();
        b.set_bracket("C", "A", a.clone()).unwrap();
        b.set_bracket("C", "B", b.zero()).unwrap();
        let spec = b.build().unwrap();
        let bundle = AlgebraBundle {
            name: "broken".into(),
            spec,
            hopf: None,
            contraction: None,
            realization: None,
            subalgebra_cases: Vec::new(),
            warnings: Vec::new(),
        };
        let report = run_verification(&bundle, &[CheckKind::Jacobi], &RunConfig::default());
        assert!(!report.passed());
        let failing: Vec<_> =
            report.items.iter().filter(|i| i.status != Status::Pass).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].subject, "(A, B, C)");
        assert!(failing[0].residual.is_some());
    }
}
