//! Graphviz rendering of the graded spectrum, `Spec R0` and φ between them.

use gradspec::{ElemSet, GradedRing, PrimeCase, Result, SpecMethod};

/// Node name from the member codes, e.g. `g_0_2_8_10`.
fn node_name(prefix: &str, set: &ElemSet) -> String {
    let codes: Vec<String> = set.codes().iter().map(u16::to_string).collect();
    format!("{prefix}_{}", codes.join("_"))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Edges `(i, j)` where `sets[i] ⊂ sets[j]` with nothing in between.
fn covering_edges(sets: &[&ElemSet]) -> Vec<(usize, usize)> {
    let below = |a: &ElemSet, b: &ElemSet| a.len() < b.len() && a.is_subset(b);
    let mut edges = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if below(a, b) && !sets.iter().any(|c| below(a, c) && below(c, b)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub fn export_dot(g: &GradedRing) -> Result<String> {
    let rep = g.graded_spec(SpecMethod::Constructive)?;
    let r = g.ring();
    let r0 = g.r0_ring();
    let graded: Vec<&ElemSet> = rep.graded_points.iter().map(|q| q.members()).collect();
    // base points are named by their codes in R so both clusters share one scheme
    let base_flat: Vec<ElemSet> = rep.base_points.iter().map(|p| g.embed_set(p.members())).collect();
    let base: Vec<&ElemSet> = base_flat.iter().collect();

    let mut out = String::from("digraph spectra {\n  rankdir=BT;\n  node [shape=box];\n");
    out += "  subgraph cluster_graded {\n    label=\"Z2Spec R\";\n";
    for (q, set) in rep.graded_points.iter().zip(&graded) {
        let case = match q.case() {
            PrimeCase::ContainsR1 => "contains R1",
            PrimeCase::PrimeSubmodule => "prime submodule",
        };
        let label = format!("{} ({case})", r.render_set(set));
        out += &format!("    {} [label={}];\n", node_name("g", set), quote(&label));
    }
    for (i, j) in covering_edges(&graded) {
        out += &format!("    {} -> {};\n", node_name("g", graded[i]), node_name("g", graded[j]));
    }
    out += "  }\n  subgraph cluster_base {\n    label=\"Spec R0\";\n";
    for (p, set) in rep.base_points.iter().zip(&base) {
        out += &format!("    {} [label={}];\n", node_name("b", set), quote(&r0.render_set(p.members())));
    }
    for (i, j) in covering_edges(&base) {
        out += &format!("    {} -> {};\n", node_name("b", base[i]), node_name("b", base[j]));
    }
    out += "  }\n";
    for &(i, j) in &rep.phi_table {
        out +=
            &format!("  {} -> {} [style=dashed, label=\"phi\"];\n", node_name("g", graded[i]), node_name("b", base[j]));
    }
    out += "}\n";
    Ok(out)
}
