//! Plain-text reports. Orderings follow the library (classes sorted by
//! representative), so the output is stable enough for golden tests.

use std::fmt::Write as _;

use splitlr::connect::ConnectionClass;
use splitlr::decomp::{Decomposition, DecompositionReport, Side, Tightness};
use splitlr::exactlin::Subspace;
use splitlr::model::{Functional, Instance, ValidationReport};
use splitlr::simple::{ComponentVerdict, FineDecomposition, SimplicityVerdict};

fn list(fs: &[Functional]) -> String {
    let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn chain(fs: &[Functional]) -> String {
    let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
    parts.join(" + ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn validation(r: &ValidationReport) -> String {
    let mut out = String::new();
    let status = if r.is_valid() { "valid" } else { "INVALID" };
    let _ = writeln!(out, "instance {}: {status}", r.instance);
    for c in &r.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  {:<4} {mark}  {}", c.id.to_string(), c.description);
        if let Some(cx) = &c.counterexample {
            let idx: Vec<String> = cx.indices.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "         law: {}", cx.law);
            let _ = writeln!(out, "         at basis indices ({})", idx.join(", "));
            let _ = writeln!(out, "         lhs = {}", cx.lhs);
            let _ = writeln!(out, "         rhs = {}", cx.rhs);
        }
    }
    out
}

fn class_block(out: &mut String, title: &str, classes: &[ConnectionClass]) {
    let _ = writeln!(out, "{title}: {}", classes.len());
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(out, "  [{i}] {}", list(&c.members));
        for w in &c.witnesses {
            let _ = writeln!(out, "      {} via {}", w.member, chain(&w.chain));
        }
    }
}

pub fn classes(inst: &Instance, roots: &[ConnectionClass], weights: &[ConnectionClass]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instance {}", inst.name());
    class_block(&mut out, "root classes", roots);
    class_block(&mut out, "weight classes", weights);
    out
}

fn subspace(s: &Subspace) -> String {
    format!("dim {} {}", s.dim(), s)
}

fn report(out: &mut String, r: &DecompositionReport) {
    let (title, ideal, comp) = match r.side {
        Side::Lie => ("L", "I", "U"),
        Side::Assoc => ("A", "A", "V"),
    };
    let _ = writeln!(out, "{title}: {} component(s)", r.components.len());
    for (i, c) in r.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "  [{i}] {ideal}[{}] class {}",
            c.ideal.class.representative(),
            list(&c.ideal.class.members)
        );
        let _ = writeln!(out, "      zero part   {}", subspace(&c.ideal.zero_part));
        let _ = writeln!(out, "      graded part {}", subspace(&c.ideal.graded_part));
        let _ = writeln!(out, "      total       {}", subspace(&c.ideal.total));
        let _ = writeln!(out, "      ideal: {}", yes(c.is_ideal));
    }
    let _ = writeln!(out, "  complement {comp}: {}", subspace(&r.complement));
    let _ = writeln!(out, "  sum direct: {}", yes(r.sum_is_direct));
    let _ = writeln!(out, "  covers whole space: {}", yes(r.covers_whole));
    let _ = writeln!(
        out,
        "  corollary hypotheses: {}",
        yes(r.corollary_hypotheses)
    );
    let _ = writeln!(out, "  components orthogonal: {}", yes(r.orthogonal));
    for v in &r.violations {
        let _ = writeln!(out, "  VIOLATION: {v}");
    }
}

pub fn decomposition(d: &Decomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instance {}", d.instance);
    report(&mut out, &d.lie);
    report(&mut out, &d.assoc);
    let _ = writeln!(out, "pairing (L-component -> A-components):");
    for e in &d.pairing.entries {
        let targets: Vec<String> = e.assoc_components.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  {} -> [{}]", e.lie_component, targets.join(", "));
    }
    for i in &d.pairing.uniqueness_violations {
        let _ = writeln!(out, "  VIOLATION: L-component {i} does not pair uniquely");
    }
    out.push_str(&tightness_lines(&d.tightness));
    out
}

fn tightness_lines(t: &Tightness) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tight: {}", t.overall);
    for (name, ok) in t.conditions() {
        let _ = writeln!(out, "  {name:<14} {ok}");
    }
    out
}

pub fn tightness(name: &str, t: &Tightness) -> String {
    format!("instance {name}\n{}", tightness_lines(t))
}

fn verdict(out: &mut String, indent: &str, v: &SimplicityVerdict) {
    let word = match v.verdict {
        splitlr::simple::Verdict::Simple => "simple",
        splitlr::simple::Verdict::NotSimple => "not simple",
        splitlr::simple::Verdict::Inconclusive => "inconclusive",
    };
    let _ = writeln!(out, "{indent}verdict: {word} ({})", v.reason);
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "{indent}proper ideal: {}", subspace(&w.ideal));
        let _ = writeln!(out, "{indent}support: {}", list(&w.support));
    }
    if let Some(p) = &v.split_pair {
        let _ = writeln!(
            out,
            "{indent}splits as {} + {}",
            subspace(&p.first),
            subspace(&p.second)
        );
    }
}

fn components(out: &mut String, title: &str, cs: &[ComponentVerdict]) {
    for c in cs {
        let h = &c.hypotheses;
        let _ = writeln!(out, "  {title} component {}:", c.component);
        let _ = writeln!(
            out,
            "    symmetric {}, root-multiplicative {}, maximal length {}, tight {}",
            yes(h.symmetric),
            yes(h.root_multiplicative),
            yes(h.maximal_length),
            yes(h.tight)
        );
        verdict(out, "    ", &c.verdict);
        let _ = writeln!(
            out,
            "    dichotomy confirmed: {}",
            yes(c.dichotomy_confirmed)
        );
    }
}

pub fn fine(fd: &FineDecomposition) -> String {
    let mut out = String::new();
    let d = &fd.decomposition;
    let h = &fd.hypotheses;
    let _ = writeln!(out, "instance {}", d.instance);
    let _ = writeln!(out, "hypotheses:");
    for (name, ok) in [
        ("symmetric_roots", h.symmetric_roots),
        ("symmetric_weights", h.symmetric_weights),
        ("root_multiplicative", h.root_multiplicative),
        ("maximal_length", h.maximal_length),
        ("all_roots_connected", h.all_roots_connected),
        ("all_weights_connected", h.all_weights_connected),
    ] {
        let _ = writeln!(out, "  {name:<22} {ok}");
    }
    out.push_str(&tightness_lines(&d.tightness));
    let _ = writeln!(out, "L:");
    verdict(&mut out, "  ", &fd.lie_verdict);
    components(&mut out, "L", &fd.lie_components);
    let _ = writeln!(out, "A:");
    verdict(&mut out, "  ", &fd.assoc_verdict);
    components(&mut out, "A", &fd.assoc_components);
    if let Some(unique) = fd.pairing_unique {
        let _ = writeln!(out, "pairing unique: {}", yes(unique));
    }
    out
}
