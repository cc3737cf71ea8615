//! The full analysis of one semigroup, as JSON or text.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::classify::{classify, ClassificationReport, LagrangeClass};
use crate::cosets::{coset_partition_report, quotient, s_normal_subgroups, CosetPartitionReport, Side};
use crate::error::{Error, Result};
use crate::products::{find_strong_decomposition, ProductDecomposition};
use crate::semigroup::{ElementSet, FiniteSemigroup};
use crate::subgroups::{all_subgroups, idempotents, largest_subgroups, maximal_subgroups, subgroup_check, EmbeddedGroup, SubgroupOptions};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupInfo {
    pub name: String,
    pub order: usize,
    pub commutative: bool,
    pub identity: Option<usize>,
    pub zero: Option<usize>,
    /// Element labels; every index in the report refers to this list.
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupEntry {
    pub members: ElementSet,
    pub identity: usize,
    pub order: usize,
}

impl From<&EmbeddedGroup<'_>> for SubgroupEntry {
    fn from(g: &EmbeddedGroup<'_>) -> Self {
        SubgroupEntry { members: g.members().clone(), identity: g.identity(), order: g.order() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalEntry {
    pub subgroup: SubgroupEntry,
    pub quotient_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub semigroup: SemigroupInfo,
    pub options: SubgroupOptions,
    pub idempotents: ElementSet,
    pub subgroups: Vec<SubgroupEntry>,
    pub maximal_subgroups: Vec<SubgroupEntry>,
    pub largest_subgroups: Vec<SubgroupEntry>,
    pub classification: ClassificationReport,
    pub s_normal_subgroups: Vec<NormalEntry>,
    pub cosets: Vec<CosetPartitionReport>,
    pub decomposition: Option<ProductDecomposition>,
    /// Wall-clock milliseconds, present only when requested so that the
    /// default output is reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Subsets whose coset partitions are reported; each must be a group.
    pub cosets: Vec<ElementSet>,
    pub side: Side,
    pub timing: bool,
}

pub fn analyze(s: &FiniteSemigroup, opts: &SubgroupOptions, extra: &AnalyzeOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    let entries = |v: Vec<EmbeddedGroup<'_>>| v.iter().map(SubgroupEntry::from).collect::<Vec<_>>();
    let subgroups = entries(all_subgroups(s, opts)?);
    let maximal = entries(maximal_subgroups(s, opts)?);
    let largest = entries(largest_subgroups(s, opts)?);
    let classification = classify(s, opts)?;
    let s_normal = s_normal_subgroups(s, opts)?
        .iter()
        .map(|g| NormalEntry { subgroup: g.into(), quotient_size: quotient(s, g).ok().map(|q| q.cardinality()) })
        .collect();
    let mut cosets = Vec::new();
    for set in &extra.cosets {
        let g = subgroup_check(s, set)
            .ok_or_else(|| Error::Precondition(format!("{} is not a subgroup", s.render_set(set))))?;
        cosets.push(coset_partition_report(s, &g, extra.side));
    }
    let decomposition = find_strong_decomposition(s, opts.policy)?;
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        semigroup: SemigroupInfo {
            name: s.name().to_string(),
            order: s.size(),
            commutative: s.is_commutative(),
            identity: s.identity(),
            zero: s.zero(),
            labels: s.labels().to_vec(),
        },
        options: *opts,
        idempotents: idempotents(s),
        subgroups,
        maximal_subgroups: maximal,
        largest_subgroups: largest,
        classification,
        s_normal_subgroups: s_normal,
        cosets,
        decomposition,
        timing_ms: extra.timing.then(|| start.elapsed().as_millis()),
    })
}

fn render(labels: &[String], set: &ElementSet) -> String {
    let parts: Vec<&str> = set.iter().map(|&i| labels[i].as_str()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(r: &AnalysisReport) -> String {
    let l = &r.semigroup.labels;
    let lab = |i: usize| l[i].as_str();
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "semigroup {} (order {})", r.semigroup.name, r.semigroup.order);
    let _ = writeln!(w, "  policy: {}", r.options.policy.as_str());
    let _ = writeln!(w, "  commutative: {}", yes(r.semigroup.commutative));
    let _ = writeln!(w, "  identity: {}", r.semigroup.identity.map_or("none", lab));
    let _ = writeln!(w, "  zero: {}", r.semigroup.zero.map_or("none", lab));
    let _ = writeln!(w, "idempotents ({}): {}", r.idempotents.len(), render(l, &r.idempotents));
    let _ = writeln!(w, "subgroups ({}):", r.subgroups.len());
    for g in &r.subgroups {
        let _ = writeln!(w, "  order {:>3}  identity {:<8} {}", g.order, lab(g.identity), render(l, &g.members));
    }
    let _ = writeln!(w, "maximal subgroups ({}):", r.maximal_subgroups.len());
    for g in &r.maximal_subgroups {
        let _ = writeln!(w, "  {}", render(l, &g.members));
    }
    let _ = writeln!(w, "largest subgroups ({}):", r.largest_subgroups.len());
    for g in &r.largest_subgroups {
        let _ = writeln!(w, "  {}", render(l, &g.members));
    }
    let c = &r.classification;
    let _ = writeln!(w, "classification:");
    let _ = writeln!(
        w,
        "  S-semigroup: {}{}",
        yes(c.is_s_semigroup),
        c.s_semigroup_witness.as_ref().map(|s| format!(" (witness {})", render(l, s))).unwrap_or_default()
    );
    if let Some(d) = &c.details {
        let verdict = |name: &str, v: &crate::classify::Verdict, w: &mut String| {
            let witness = v.witness.as_ref().map(|s| format!(" (witness {})", render(l, s))).unwrap_or_default();
            let _ = writeln!(w, "  {name}: {}{witness}", yes(v.holds));
        };
        verdict("S-commutative", &d.s_commutative, w);
        verdict("S-weakly commutative", &d.s_weakly_commutative, w);
        verdict("S-cyclic", &d.s_cyclic, w);
        verdict("S-weakly cyclic", &d.s_weakly_cyclic, w);
        let lagrange = match d.lagrange.class {
            LagrangeClass::Lagrange => "lagrange",
            LagrangeClass::WeaklyLagrange => "weakly-lagrange",
            LagrangeClass::NonLagrange => "non-lagrange",
        };
        let _ = writeln!(w, "  Lagrange class: {lagrange}");
        let _ = writeln!(w, "  p-Sylow semigroup: {}", yes(d.is_p_sylow_semigroup));
        for sd in d.sylow.iter().filter(|sd| !sd.s_p_sylow_subgroups.is_empty() || !sd.non_p_sylow_subgroups.is_empty()) {
            let (kind, groups) = if sd.divides_order {
                ("S-p-Sylow", &sd.s_p_sylow_subgroups)
            } else {
                ("non-p-Sylow", &sd.non_p_sylow_subgroups)
            };
            let sets: Vec<String> = groups.iter().map(|g| render(l, g)).collect();
            let _ = writeln!(w, "    p = {}: {kind} {}", sd.prime, sets.join(" "));
        }
        let _ = writeln!(w, "  Cauchy semigroup: {}", yes(d.is_cauchy_semigroup));
        let cauchy: Vec<String> = d
            .cauchy_elements
            .iter()
            .map(|e| format!("{}:{}{}", lab(e.element), e.order, if e.is_cauchy { "*" } else { "" }))
            .collect();
        let _ = writeln!(w, "    element:order (* = Cauchy): {}", cauchy.join(" "));
        let _ = writeln!(w, "  S-simple: {} ({} hyper subsemigroups)", yes(d.is_s_simple), d.hyper_subsemigroups.len());
        let _ = writeln!(w, "  pseudo-simple: {}", yes(d.is_pseudo_simple));
        let _ = writeln!(w, "  S-maximal: {}", yes(d.is_s_maximal));
    }
    let _ = writeln!(w, "S-normal subgroups ({}):", r.s_normal_subgroups.len());
    for n in &r.s_normal_subgroups {
        let q = n.quotient_size.map_or("undefined".to_string(), |q| q.to_string());
        let _ = writeln!(w, "  {}  quotient size {q}", render(l, &n.subgroup.members));
    }
    for cp in &r.cosets {
        let side = match cp.side {
            Side::Left => "xA",
            Side::Right => "Ax",
        };
        let _ = writeln!(
            w,
            "cosets {side} of {}: disjoint {}, covering {}, uniform {}",
            render(l, &cp.subgroup),
            yes(cp.is_disjoint),
            yes(cp.covers),
            yes(cp.uniform)
        );
        for class in &cp.classes {
            let _ = writeln!(w, "  {}", render(l, &class.members));
        }
    }
    match &r.decomposition {
        Some(d) => {
            let b = d.b_factor.as_ref().map(|b| render(l, b)).unwrap_or_default();
            let factors: Vec<String> = d.factors.iter().map(|f| render(l, f)).collect();
            let _ = writeln!(w, "strong decomposition: {b} · {}", factors.join(" · "));
        }
        None => {
            let _ = writeln!(w, "strong decomposition: none found");
        }
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(w, "time: {ms} ms");
    }
    out
}

pub fn to_json(r: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{make_full_transformation, make_zn_mul};
    use crate::subgroups::IdentityPolicy;

    #[test]
    fn z12_report() {
        let z12 = make_zn_mul(12).unwrap();
        let r = analyze(&z12, &SubgroupOptions::default(), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.subgroups.len(), 6);
        assert_eq!(r.maximal_subgroups.len(), 3);
        assert_eq!(to_json(&r), to_json(&analyze(&z12, &SubgroupOptions::default(), &AnalyzeOptions::default()).unwrap()));
        let v: serde_json::Value = serde_json::from_str(&to_json(&r)).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert!(v.get("timing_ms").is_none());
        assert!(render_text(&r).contains("maximal subgroups (3)"));
    }

    #[test]
    fn t3_global_identity() {
        let t3 = make_full_transformation(3).unwrap();
        let r = analyze(&t3, &SubgroupOptions::with_policy(IdentityPolicy::GlobalIdentityOnly), &AnalyzeOptions::default())
            .unwrap();
        assert_eq!(r.maximal_subgroups.len(), 1);
        assert_eq!(r.maximal_subgroups[0].order, 6);
    }

    #[test]
    fn coset_requests() {
        let z10 = make_zn_mul(10).unwrap();
        let extra = AnalyzeOptions { cosets: vec![ElementSet::from([1, 9])], ..Default::default() };
        let r = analyze(&z10, &SubgroupOptions::default(), &extra).unwrap();
        assert_eq!(r.cosets[0].classes.len(), 6);
        let bad = AnalyzeOptions { cosets: vec![ElementSet::from([1, 3])], ..Default::default() };
        assert!(analyze(&z10, &SubgroupOptions::default(), &bad).is_err());
    }
}
