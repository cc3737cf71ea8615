//! The test corpus, an exhaustive subset oracle independent of the H-class
//! machinery, and the ledger of checked textbook claims.

use serde::{Deserialize, Serialize};

use crate::classify::{cauchy_elements, lagrange_class};
use crate::error::{Error, Result};
use crate::group::cyclic_subgroup;
use crate::semigroup::{
    direct_product, make_cyclic_group, make_full_transformation, make_matrix_semigroup, make_symmetric_group,
    make_zn_mul, ElementSet, FiniteSemigroup,
};
use crate::subgroups::{maximal_subgroup_at, maximal_subgroups, subgroup_check, IdentityPolicy, SubgroupOptions};

/// Which families go into the corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// `Z_n` for `2 ≤ n ≤ zn_max`.
    pub zn_max: usize,
    /// `S(n)` for `1 ≤ n ≤ tn_max`.
    pub tn_max: usize,
    /// `(k, m)`: `k×k` matrices over `Z_m`.
    pub matrices: Vec<(usize, usize)>,
    pub products: bool,
    /// Small groups given by their own tables (cyclic and symmetric).
    pub groups: bool,
    /// Hand-written non-commutative tables.
    pub tables: bool,
    /// Semigroups larger than this are skipped.
    pub size_limit: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            zn_max: 40,
            tn_max: 4,
            matrices: vec![(2, 2), (2, 3)],
            products: true,
            groups: true,
            tables: true,
            size_limit: 256,
        }
    }
}

fn table(name: &str, rows: &[&[u64]]) -> FiniteSemigroup {
    let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
    FiniteSemigroup::from_table(name, &rows, None).expect("hand-written table is a semigroup")
}

/// Non-commutative or otherwise unusual tables.
pub fn hand_tables() -> Vec<FiniteSemigroup> {
    vec![
        table("trivial", &[&[0]]),
        table("left-zero-3", &[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]]),
        table("right-zero-3", &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]),
        // Rectangular band 2×2: (i,j)(k,l) = (i,l), element 2i+j.
        table("rect-band-2x2", &[&[0, 1, 0, 1], &[0, 1, 0, 1], &[2, 3, 2, 3], &[2, 3, 2, 3]]),
        // Null semigroup with a zero.
        table("null-3", &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
        // C_2 = {1,2} with an adjoined zero.
        table("c2-with-zero", &[&[0, 0, 0], &[0, 1, 2], &[0, 2, 1]]),
        // Left zeros {0,1} permuted from the left by C_2 = {2,3}.
        table("lz2-over-c2", &[&[0, 0, 0, 0], &[1, 1, 1, 1], &[0, 1, 2, 3], &[1, 0, 3, 2]]),
    ]
}

pub fn corpus(spec: &CorpusSpec) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for n in 2..=spec.zn_max {
        out.push(make_zn_mul(n)?);
    }
    for n in 1..=spec.tn_max {
        out.push(make_full_transformation(n)?);
    }
    for &(k, m) in &spec.matrices {
        out.push(make_matrix_semigroup(k, m)?);
    }
    if spec.groups {
        for n in [1, 2, 3, 4, 5, 6, 7, 8, 12, 25] {
            out.push(make_cyclic_group(n)?);
        }
        for n in [3, 4] {
            out.push(make_symmetric_group(n)?);
        }
    }
    if spec.products {
        let pairs: [(FiniteSemigroup, FiniteSemigroup); 5] = [
            (make_zn_mul(2)?, make_zn_mul(3)?),
            (make_zn_mul(3)?, make_zn_mul(4)?),
            (make_zn_mul(4)?, make_zn_mul(4)?),
            (make_full_transformation(2)?, make_zn_mul(3)?),
            (make_cyclic_group(2)?, make_zn_mul(5)?),
        ];
        for (a, b) in &pairs {
            out.push(direct_product(a, b)?);
        }
    }
    if spec.tables {
        out.extend(hand_tables());
    }
    out.retain(|s| s.size() <= spec.size_limit);
    Ok(out)
}

/// Subset budget for the exhaustive search.
pub const BRUTE_FORCE_BUDGET: u128 = 1 << 22;

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Every subset of size `1..=max_subset_size` (default: all sizes) that is a
/// group, by direct subset scan. Sorted by size, then members.
pub fn brute_force_subgroups(s: &FiniteSemigroup, max_subset_size: Option<usize>) -> Result<Vec<ElementSet>> {
    let n = s.size();
    let k_max = max_subset_size.unwrap_or(n).min(n);
    let work: u128 = (1..=k_max).map(|k| binomial(n, k)).sum();
    if work > BRUTE_FORCE_BUDGET {
        return Err(Error::SizeLimit { what: format!("subset scan of {}", s.name()), size: work, cap: BRUTE_FORCE_BUDGET as usize });
    }
    let mut out = Vec::new();
    for k in 1..=k_max {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let set = ElementSet::from(idx.clone());
            if subgroup_check(s, &set).is_some() {
                out.push(set);
            }
            // Next k-combination in lexicographic order.
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrataStatus {
    Confirmed,
    Refuted,
    Ambiguous,
}

/// The semigroup a witness lives in, so it can be rebuilt and re-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Subject {
    Zn(usize),
    Tn(usize),
}

impl Subject {
    pub fn build(self) -> Result<FiniteSemigroup> {
        match self {
            Subject::Zn(n) => make_zn_mul(n),
            Subject::Tn(n) => make_full_transformation(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataEntry {
    pub claim_id: String,
    pub book_claim: String,
    pub oracle_verdict: String,
    pub status: ErrataStatus,
    pub subject: Option<Subject>,
    /// For refutations: a subgroup of `subject` contradicting the claim.
    pub witness: Option<ElementSet>,
}

impl ErrataEntry {
    /// The witness, if any, is a subgroup of the rebuilt subject.
    pub fn witness_verifies(&self) -> bool {
        match (&self.subject, &self.witness) {
            (Some(subject), Some(w)) => subject.build().is_ok_and(|s| subgroup_check(&s, w).is_some()),
            (_, None) => self.status != ErrataStatus::Refuted,
            (None, Some(_)) => false,
        }
    }
}

/// Claim id and expected status for every catalogued claim.
pub const EXPECTED_ERRATA: &[(&str, ErrataStatus)] = &[
    ("z9-two-proper-subgroups", ErrataStatus::Refuted),
    ("z7-two-proper-subgroups", ErrataStatus::Refuted),
    ("s3-subgroups-share-identity", ErrataStatus::Refuted),
    ("z25-units-not-cyclic", ErrataStatus::Refuted),
    ("z9-no-dividing-subgroup", ErrataStatus::Refuted),
    ("z8-sylow-conjugacy", ErrataStatus::Ambiguous),
    ("maximal-subgroup-count", ErrataStatus::Ambiguous),
    ("zp-no-cauchy-elements", ErrataStatus::Confirmed),
];

fn proper(s: &FiniteSemigroup) -> Result<Vec<ElementSet>> {
    Ok(crate::subgroups::all_subgroups(s, &SubgroupOptions::default())?
        .into_iter()
        .map(|g| g.members().clone())
        .collect())
}

fn extra_subgroup(
    claim_id: &str,
    book_claim: &str,
    subject: Subject,
    claimed: &[ElementSet],
) -> Result<ErrataEntry> {
    let s = subject.build()?;
    let found = proper(&s)?;
    let extra = found.iter().find(|g| !claimed.contains(g)).cloned();
    let missing = claimed.iter().any(|c| !found.contains(c));
    let (status, verdict) = match (&extra, missing) {
        (None, false) => (ErrataStatus::Confirmed, format!("exactly the claimed {} subgroups", claimed.len())),
        (Some(w), _) => (
            ErrataStatus::Refuted,
            format!("{} proper subgroups of order ≥ 2; also {}", found.len(), s.render_set(w)),
        ),
        (None, true) => (ErrataStatus::Refuted, "a claimed subgroup is not a subgroup".to_string()),
    };
    Ok(ErrataEntry {
        claim_id: claim_id.into(),
        book_claim: book_claim.into(),
        oracle_verdict: verdict,
        status,
        subject: Some(subject),
        witness: extra,
    })
}

/// Evaluates every catalogued claim against the engine and the oracle.
pub fn run_errata_suite() -> Result<Vec<ErrataEntry>> {
    let mut out = Vec::new();

    out.push(extra_subgroup(
        "z9-two-proper-subgroups",
        "Z_9 has only two proper subsets that are groups, {1,8} and {1,2,4,5,7,8}",
        Subject::Zn(9),
        &[ElementSet::from([1, 8]), ElementSet::from([1, 2, 4, 5, 7, 8])],
    )?);

    out.push(extra_subgroup(
        "z7-two-proper-subgroups",
        "the only proper subsets of Z_7 that are groups are {1,...,6} and {1,6}",
        Subject::Zn(7),
        &[ElementSet::from([1, 2, 3, 4, 5, 6]), ElementSet::from([1, 6])],
    )?);

    {
        let s = make_full_transformation(3)?;
        let id = s.identity().expect("S(3) has an identity");
        let groups = crate::subgroups::all_subgroups(&s, &SubgroupOptions::default())?;
        let other = groups.iter().find(|g| g.identity() != id);
        out.push(ErrataEntry {
            claim_id: "s3-subgroups-share-identity".into(),
            book_claim: "every subgroup of S(3) has the identity map as its identity".into(),
            oracle_verdict: match other {
                Some(g) => format!("{} has identity {}", g.render(), s.label(g.identity())),
                None => "all subgroups share the identity map".into(),
            },
            status: if other.is_some() { ErrataStatus::Refuted } else { ErrataStatus::Confirmed },
            subject: Some(Subject::Tn(3)),
            witness: other.map(|g| g.members().clone()),
        });
    }

    {
        let s = make_zn_mul(25)?;
        let units = maximal_subgroup_at(&s, 1)?;
        let generated = cyclic_subgroup(&units, 2)?;
        let cyclic = generated.members() == units.members();
        out.push(ErrataEntry {
            claim_id: "z25-units-not-cyclic".into(),
            book_claim: "the 20 units of Z_25 do not form a cyclic group".into(),
            oracle_verdict: format!("2 has order {} and generates the units", generated.order()),
            status: if cyclic { ErrataStatus::Refuted } else { ErrataStatus::Confirmed },
            subject: Some(Subject::Zn(25)),
            witness: cyclic.then(|| generated.members().clone()),
        });
    }

    {
        let s = make_zn_mul(9)?;
        let verdict = lagrange_class(&s, &SubgroupOptions::default())?;
        out.push(ErrataEntry {
            claim_id: "z9-no-dividing-subgroup".into(),
            book_claim: "no subgroup of Z_9 has order dividing 9".into(),
            oracle_verdict: format!("{:?}", verdict.class),
            status: if verdict.dividing.is_some() { ErrataStatus::Refuted } else { ErrataStatus::Confirmed },
            subject: Some(Subject::Zn(9)),
            witness: verdict.dividing,
        });
    }

    out.push(ErrataEntry {
        claim_id: "z8-sylow-conjugacy".into(),
        book_claim: "in Z_8, {1,7} is conjugate to {1,5} and {1,3} but not to {1,3,5,7}".into(),
        oracle_verdict: "Z_8 is commutative, so gAg⁻¹ = A for every subgroup A and unit g; \
                         no reading of conjugacy separates the order-2 subgroups as claimed"
            .into(),
        status: ErrataStatus::Ambiguous,
        subject: Some(Subject::Zn(8)),
        witness: None,
    });

    {
        let t3 = make_full_transformation(3)?;
        let z12 = make_zn_mul(12)?;
        let count = |s: &FiniteSemigroup, p| maximal_subgroups(s, &SubgroupOptions::with_policy(p)).map(|m| m.len());
        let t_any = count(&t3, IdentityPolicy::AnyIdempotent)?;
        let t_global = count(&t3, IdentityPolicy::GlobalIdentityOnly)?;
        let z_any = count(&z12, IdentityPolicy::AnyIdempotent)?;
        let z_global = count(&z12, IdentityPolicy::GlobalIdentityOnly)?;
        out.push(ErrataEntry {
            claim_id: "maximal-subgroup-count".into(),
            book_claim: "S(n) has the single maximal subgroup S_n, while Z_12 has three maximal subgroups".into(),
            oracle_verdict: format!(
                "S(3): {t_any} maximal subgroups at all idempotents, {t_global} at the identity; \
                 Z_12: {z_any} at all idempotents, {z_global} at the identity; \
                 the two claims need different identity policies"
            ),
            status: ErrataStatus::Ambiguous,
            subject: None,
            witness: None,
        });
    }

    {
        let mut all_clear = true;
        for p in [5, 7, 11, 13] {
            let s = make_zn_mul(p)?;
            all_clear &= cauchy_elements(&s, &SubgroupOptions::default())?.iter().all(|c| !c.is_cauchy);
        }
        out.push(ErrataEntry {
            claim_id: "zp-no-cauchy-elements".into(),
            book_claim: "no element of Z_p, p prime, is a Smarandache Cauchy element".into(),
            oracle_verdict: format!("checked p = 5, 7, 11, 13: {}", if all_clear { "none" } else { "found one" }),
            status: if all_clear { ErrataStatus::Confirmed } else { ErrataStatus::Refuted },
            subject: None,
            witness: None,
        });
    }

    Ok(out)
}

/// Entries whose status differs from the catalogue, or refutations whose
/// witness does not re-verify.
pub fn errata_mismatches(entries: &[ErrataEntry]) -> Vec<String> {
    let mut out = Vec::new();
    for &(id, want) in EXPECTED_ERRATA {
        match entries.iter().find(|e| e.claim_id == id) {
            None => out.push(format!("{id}: missing")),
            Some(e) if e.status != want => out.push(format!("{id}: expected {want:?}, got {:?}", e.status)),
            Some(e) if !e.witness_verifies() => out.push(format!("{id}: witness does not verify")),
            Some(_) => {}
        }
    }
    if entries.len() != EXPECTED_ERRATA.len() {
        out.push(format!("{} entries, expected {}", entries.len(), EXPECTED_ERRATA.len()));
    }
    out
}

/// A plain-text rendering of the ledger.
pub fn errata_document(entries: &[ErrataEntry]) -> String {
    let mut doc = String::from("Errata ledger\n=============\n");
    for e in entries {
        let status = match e.status {
            ErrataStatus::Confirmed => "confirmed",
            ErrataStatus::Refuted => "refuted",
            ErrataStatus::Ambiguous => "ambiguous",
        };
        doc.push_str(&format!("\n[{status}] {}\n  claim:  {}\n  oracle: {}\n", e.claim_id, e.book_claim, e.oracle_verdict));
        if let (Some(subject), Some(w)) = (e.subject, &e.witness) {
            if let Ok(s) = subject.build() {
                doc.push_str(&format!("  witness: {} in {}\n", s.render_set(w), s.name()));
            }
        }
    }
    doc
}
