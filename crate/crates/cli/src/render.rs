//! Text and machine-record renderers. Iteration orders are canonical
//! throughout, so identical inputs produce byte-identical output.

use nilcortex::coadjoint::{Covector, JumpIndexSet};
use nilcortex::cortex::{ClassifierReport, CortexReport, MembershipReport, WitnessSchedule};
use nilcortex::exactmath::format_rat_list;
use nilcortex::gd::InvariantGenerators;
use nilcortex::liealg::{LieAlgebra, Subspace, ValidationReport};
use serde_json::json;

pub fn record_to_string(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn class_text(report: &ValidationReport) -> String {
    match report.nilpotency_class {
        Some(c) => c.to_string(),
        None => "none (not nilpotent)".to_string(),
    }
}

pub fn validate_text(alg: &LieAlgebra, report: &ValidationReport, accepted: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim: {}\n", alg.dim()));
    out.push_str(&format!("basis: {}\n", alg.basis_labels().join(" ")));
    match report.jacobi_witness {
        None => out.push_str("jacobi: pass\n"),
        Some((i, j, k)) => out.push_str(&format!("jacobi: FAIL at basis triple ({i}, {j}, {k})\n")),
    }
    out.push_str(&format!("nilpotency class: {}\n", class_text(report)));
    out.push_str(&format!(
        "two-step: {}\n",
        if report.two_step { "yes" } else { "no" }
    ));
    let center = alg.center();
    out.push_str(&format!("center dim: {}\n", center.dim()));
    out.push_str("center basis:\n");
    for b in center.basis() {
        out.push_str(&format!("  {}\n", format_rat_list(b)));
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if accepted { "ok" } else { "rejected" }
    ));
    out
}

pub fn validate_record(alg: &LieAlgebra, report: &ValidationReport, accepted: bool) -> String {
    let center = alg.center();
    record_to_string(&json!({
        "dim": alg.dim(),
        "basis": alg.basis_labels(),
        "jacobi_ok": report.jacobi_ok,
        "jacobi_witness": report.jacobi_witness.map(|(i, j, k)| vec![i, j, k]),
        "nilpotency_class": report.nilpotency_class,
        "lower_central_dims": report.lower_central_dims,
        "two_step": report.two_step,
        "center_dim": center.dim(),
        "center_basis": basis_strings(center),
        "accepted": accepted,
    }))
}

fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis()
        .iter()
        .map(|v| v.iter().map(|c| c.to_string()).collect())
        .collect()
}

pub fn orbit_text(dim: usize, tangent: &Subspace) -> String {
    let mut out = format!("orbit dimension: {dim}\ntangent basis:\n");
    for v in tangent.basis() {
        out.push_str(&format!("  {}\n", format_rat_list(v)));
    }
    out
}

pub fn orbit_record(dim: usize, tangent: &Subspace) -> String {
    record_to_string(&json!({
        "orbit_dimension": dim,
        "tangent_basis": basis_strings(tangent),
    }))
}

pub fn jump_record(jumps: &JumpIndexSet) -> String {
    record_to_string(&json!({
        "jump_indices": jumps.indices(),
        "cardinality": jumps.len(),
    }))
}

pub fn invariants_text(
    d: usize,
    gens: &InvariantGenerators,
    names: &[String],
    all_vanish: bool,
) -> String {
    let mut out = format!("invariant generators for d = {d} ({}):\n", gens.len());
    for p in gens.generators() {
        out.push_str(&format!("  {}\n", p.to_string_named(names)));
    }
    out.push_str(&format!(
        "all derivations vanish: {}\n",
        if all_vanish { "\u{2713}" } else { "\u{2717}" }
    ));
    out
}

pub fn invariants_record(
    d: usize,
    gens: &InvariantGenerators,
    names: &[String],
    all_vanish: bool,
) -> String {
    record_to_string(&json!({
        "d": d,
        "generators": gens
            .generators()
            .iter()
            .map(|p| p.to_string_named(names))
            .collect::<Vec<_>>(),
        "derivations_vanish": all_vanish,
    }))
}

pub fn membership_text(ell: &Covector, report: &MembershipReport, q_text: &str) -> String {
    let d = report.d;
    let z_ok = report.z_values.iter().all(num_traits::Zero::is_zero);
    let q_ok = num_traits::Zero::is_zero(&report.q_value);
    let mark = |ok: bool| if ok { "\u{2713}" } else { "\u{2717}" };
    format!(
        "covector: {}\nQ_{d} = {q_text}\nz values: {}\nQ_{d} value: {}\n{}: z=0 {}, Q_{d} = 0 {}\n",
        ell.to_csv_string(),
        format_rat_list(&report.z_values),
        report.q_value,
        if report.member { "MEMBER" } else { "NON-MEMBER" },
        mark(z_ok),
        mark(q_ok),
    )
}

pub fn witness_text(schedule: &WitnessSchedule, report: &CortexReport) -> String {
    let mut out = format!("target: {}\n", schedule.target.to_csv_string());
    out.push_str("eps | ell(eps) | z residual\n");
    for step in &schedule.steps {
        out.push_str(&format!(
            "{} | {} | {}\n",
            step.epsilon,
            step.ell_eps.to_csv_string(),
            format_rat_list(&step.z_residual),
        ));
    }
    let exact = report.witness.as_ref().is_some_and(|w| w.exact_in_yx);
    out.push_str(&format!(
        "y and x coordinates reproduced exactly at every eps: {}\n",
        if exact { "\u{2713}" } else { "\u{2717}" }
    ));
    out
}

pub fn perturbed_witness_text(slot: usize, rows: &[(
    nilcortex::Rat,
    nilcortex::Rat,
    f64,
)]) -> String {
    let mut out = format!(
        "degenerate stratum: y{slot} = 0; exact schedule undefined, reporting numeric perturbation limit\n"
    );
    out.push_str("eta | eps | max |image - target| (floating)\n");
    for (eta, eps, dist) in rows {
        out.push_str(&format!("{eta} | {eps} | {dist:.16e}\n"));
    }
    out
}

pub fn classify_text(alg: &LieAlgebra, report: &ClassifierReport) -> String {
    let dims: Vec<String> = report.orbit_dims_seen.iter().map(|d| d.to_string()).collect();
    format!(
        "dim: {}, center dim: {}, z-perp dim: {}\n\
         sampled orbit dimensions over {} trials: {{{}}}\n\
         generic orbit dimension: {} (codimension {} in z-perp)\n\
         verdict: {}\n",
        alg.dim(),
        alg.center().dim(),
        report.zperp_dim,
        report.trials,
        dims.join(", "),
        report.generic_orbit_dim,
        report.codim,
        report.verdict_line(),
    )
}

pub fn cross_section_record(d: usize, point: &Covector) -> String {
    record_to_string(&json!({
        "d": d,
        "point": point.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    }))
}

/// One point per row, floating decimal with 17 significant digits.
pub fn cloud_csv(cloud: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for point in cloud {
        let row: Vec<String> = point.iter().map(|c| format!("{c:.16e}")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
