//! Mechanical re-verification of the published structural claims for the
//! four generated families: forced-pair lower bounds, equalizer-set
//! constructions, exact values, empty-W assertions, and the witness tables,
//! instance by instance over a configurable n range.

pub mod tables;

use crate::dist::{all_pairs_distances, DistanceMatrix};
use crate::engine::matching::forced_pair_lower_bound;
use crate::engine::verify::is_distance_equalizer;
use crate::engine::wset::{forced_pairs, w_set, WitnessFamily};
use crate::graph::Graph;
use crate::polytope::{vertex_name, PolytopeClass, PROVEN_MIN_N};
use serde::Serialize;
use tables::{check_table_coverage, equalizer_blocks, table_for, Parity};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReproError {
    #[error("claims are published for n >= {min}, got n = {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("claim for class {class} applies to {expected} n only, got n = {n}")]
    ParityMismatch {
        class: PolytopeClass,
        n: usize,
        expected: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Repaired,
    Failed,
}

/// What a claim asserts. Value-bearing kinds are theorem-level: a failure
/// there means a published value is wrong. An empty-W assertion is a proof
/// step; refuting one leaves the value claims standing on their own checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    LowerBound,
    EqualizerSet,
    ExactValue,
    Table,
    EmptyW,
}

impl ClaimKind {
    pub fn is_theorem_level(self) -> bool {
        !matches!(self, ClaimKind::EmptyW)
    }
}

/// One concrete (u, v, witness) check from a table.
#[derive(Debug, Clone, Serialize)]
pub struct RowInstance {
    pub row: String,
    pub i: usize,
    pub u: String,
    pub v: String,
    pub witness: String,
    pub d_u: usize,
    pub d_v: usize,
    pub verdict: Verdict,
    /// Valid replacement witnesses inside the published set, ascending.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alternates: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub class: String,
    pub n: usize,
    pub kind: ClaimKind,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<RowInstance>,
}

/// The published equalizer-set construction, as vertex ids of the generated
/// instance: whole blocks, contiguous id ranges.
pub fn published_equalizer_set(class: PolytopeClass, n: usize) -> Vec<usize> {
    let blocks = class.blocks();
    equalizer_blocks(class)
        .iter()
        .map(|b| blocks.iter().position(|x| x == b).unwrap())
        .flat_map(|bi| bi * n..(bi + 1) * n)
        .collect()
}

/// Published lower bound: 3n for the six-block family, 2n otherwise.
pub fn published_lower_bound(class: PolytopeClass, n: usize) -> usize {
    match class {
        PolytopeClass::R2 => 3 * n,
        _ => 2 * n,
    }
}

/// Pair families asserted to have empty W-sets, as (block, index offset)
/// per endpoint: the pair is (x_{i+du}, y_{i+dv}) for every i.
fn asserted_empty_w(class: PolytopeClass) -> Vec<(char, i64, char, i64, &'static str)> {
    match class {
        PolytopeClass::R2 => vec![
            ('c', 0, 'd', 0, "(c_i, d_i)"),
            ('b', 0, 'e', -1, "(b_i, e_(i-1))"),
            ('a', 0, 'f', -1, "(a_i, f_(i-1))"),
        ],
        PolytopeClass::S => vec![
            ('a', 0, 'b', 2, "(a_i, b_(i+2))"),
            ('c', 0, 'd', 0, "(c_i, d_i)"),
        ],
        PolytopeClass::S2 => vec![
            ('a', 0, 'b', 0, "(a_i, b_i)"),
            ('c', 0, 'd', 0, "(c_i, d_i)"),
        ],
        PolytopeClass::T => vec![
            ('b', 0, 'c', 0, "(b_i, c_i)"),
            ('a', 0, 'd', -1, "(a_i, d_(i-1))"),
        ],
    }
}

/// n-parity under which the lemma-level claims (empty W-sets, lower bound)
/// are asserted.
fn lemma_parity(class: PolytopeClass) -> Parity {
    match class {
        PolytopeClass::S => Parity::Odd,
        _ => Parity::Any,
    }
}

/// n-parity under which the exact value and the table are asserted.
fn theorem_parity(class: PolytopeClass) -> Parity {
    match class {
        PolytopeClass::R2 | PolytopeClass::S2 => Parity::Even,
        PolytopeClass::S => Parity::Odd,
        PolytopeClass::T => Parity::Any,
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
        Parity::Any => "all",
    }
}

fn check_applicable(class: PolytopeClass, n: usize, p: Parity) -> Result<(), ReproError> {
    if n < PROVEN_MIN_N {
        return Err(ReproError::NTooSmall {
            n,
            min: PROVEN_MIN_N,
        });
    }
    if !p.admits(n) {
        return Err(ReproError::ParityMismatch {
            class,
            n,
            expected: parity_name(p),
        });
    }
    Ok(())
}

fn instance(class: PolytopeClass, n: usize) -> (Graph, DistanceMatrix) {
    let g = class
        .generate(n)
        .unwrap_or_else(|e| unreachable!("n >= 5 was checked: {e}"));
    let d = all_pairs_distances(&g);
    (g, d)
}

fn claim_empty_w(class: PolytopeClass, n: usize, g: &Graph, d: &DistanceMatrix) -> ClaimResult {
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0usize;
    for (bu, du, bv, dv, label) in asserted_empty_w(class) {
        for i in 0..n {
            let iu = (i as i64 + du).rem_euclid(n as i64) as usize;
            let iv = (i as i64 + dv).rem_euclid(n as i64) as usize;
            let u = g.vertex_id(&vertex_name(bu, iu)).unwrap();
            let v = g.vertex_id(&vertex_name(bv, iv)).unwrap();
            let w = w_set(d, u, v).unwrap();
            checked += 1;
            if let Some(&x) = w.members.first() {
                failures.push(format!(
                    "{label} at i={i}: {} is equidistant from {} and {}",
                    g.vertex_name(x),
                    g.vertex_name(u),
                    g.vertex_name(v)
                ));
            }
        }
    }
    let verdict = if failures.is_empty() {
        Verdict::Verified
    } else {
        Verdict::Failed
    };
    let detail = if failures.is_empty() {
        format!("all {checked} asserted pairs have empty W-sets")
    } else {
        format!(
            "{} of {checked} pairs have nonempty W-sets: {}",
            failures.len(),
            failures[0]
        )
    };
    ClaimResult {
        id: format!("{}-empty-w", class.tag()),
        class: class.tag().to_string(),
        n,
        kind: ClaimKind::EmptyW,
        verdict,
        detail,
        rows: Vec::new(),
    }
}

fn claim_lower_bound(class: PolytopeClass, n: usize, g: &Graph, d: &DistanceMatrix) -> ClaimResult {
    let fam = WitnessFamily::build(d);
    let fp = forced_pairs(&fam);
    let lb = forced_pair_lower_bound(g.vertex_count(), &fp);
    let target = published_lower_bound(class, n);
    let verdict = if lb >= target {
        Verdict::Verified
    } else {
        Verdict::Failed
    };
    ClaimResult {
        id: format!("{}-lower-bound", class.tag()),
        class: class.tag().to_string(),
        n,
        kind: ClaimKind::LowerBound,
        verdict,
        detail: format!(
            "matching over {} forced pairs proves >= {lb}; published bound {target}",
            fp.len()
        ),
        rows: Vec::new(),
    }
}

fn claim_equalizer_set(
    class: PolytopeClass,
    n: usize,
    g: &Graph,
    d: &DistanceMatrix,
) -> ClaimResult {
    let s = published_equalizer_set(class, n);
    let (verdict, detail) = match is_distance_equalizer(d, &s) {
        Ok(cert) => match cert.validate(d) {
            Ok(()) => (
                Verdict::Verified,
                format!(
                    "block set of size {} verifies with {} witnesses",
                    cert.value(),
                    cert.witnesses.len()
                ),
            ),
            Err(e) => (Verdict::Failed, format!("certificate invalid: {e}")),
        },
        Err(p) => (
            Verdict::Failed,
            format!(
                "pair ({}, {}) has no equidistant member in the set",
                g.vertex_name(p.u),
                g.vertex_name(p.v)
            ),
        ),
    };
    ClaimResult {
        id: format!("{}-equalizer-set", class.tag()),
        class: class.tag().to_string(),
        n,
        kind: ClaimKind::EqualizerSet,
        verdict,
        detail,
        rows: Vec::new(),
    }
}

fn claim_exact(class: PolytopeClass, n: usize, g: &Graph, d: &DistanceMatrix) -> ClaimResult {
    let fam = WitnessFamily::build(d);
    let lb = forced_pair_lower_bound(g.vertex_count(), &forced_pairs(&fam));
    let s = published_equalizer_set(class, n);
    let cert_ok = is_distance_equalizer(d, &s)
        .map(|c| c.validate(d).is_ok())
        .unwrap_or(false);
    let value = s.len();
    let verdict = if lb >= value && cert_ok {
        Verdict::Verified
    } else {
        Verdict::Failed
    };
    ClaimResult {
        id: format!("{}-exact", class.tag()),
        class: class.tag().to_string(),
        n,
        kind: ClaimKind::ExactValue,
        verdict,
        detail: format!(
            "lower bound {lb} meets construction of size {value}: value is exactly {value}"
        ),
        rows: Vec::new(),
    }
}

/// Lower bound plus, where the value is published exactly, the construction
/// and exact-value claims.
pub fn verify_theorem(class: PolytopeClass, n: usize) -> Result<Vec<ClaimResult>, ReproError> {
    check_applicable(class, n, lemma_parity(class))?;
    let (g, d) = instance(class, n);
    let mut out = vec![claim_lower_bound(class, n, &g, &d)];
    if theorem_parity(class).admits(n) {
        out.push(claim_equalizer_set(class, n, &g, &d));
        out.push(claim_exact(class, n, &g, &d));
    }
    Ok(out)
}

pub fn verify_empty_w_claims(class: PolytopeClass, n: usize) -> Result<ClaimResult, ReproError> {
    check_applicable(class, n, lemma_parity(class))?;
    let (g, d) = instance(class, n);
    Ok(claim_empty_w(class, n, &g, &d))
}

pub fn verify_table(class: PolytopeClass, n: usize) -> Result<ClaimResult, ReproError> {
    check_applicable(class, n, theorem_parity(class))?;
    let (g, d) = instance(class, n);
    Ok(claim_table(class, n, &g, &d))
}

fn claim_table(class: PolytopeClass, n: usize, g: &Graph, d: &DistanceMatrix) -> ClaimResult {
    let spec = table_for(class);
    let id = format!("{}-table", class.tag());
    if let Err(e) = check_table_coverage(&spec, n) {
        return ClaimResult {
            id,
            class: class.tag().to_string(),
            n,
            kind: ClaimKind::Table,
            verdict: Verdict::Failed,
            detail: format!("coverage check failed: {e}"),
            rows: Vec::new(),
        };
    }
    let s = published_equalizer_set(class, n);
    let mut rows = Vec::new();
    let (mut ok, mut repaired, mut failed) = (0usize, 0usize, 0usize);
    for group in &spec.groups {
        for i in group.index_range(n) {
            let row = group
                .row_for(n, i)
                .unwrap_or_else(|| unreachable!("coverage was checked"));
            let u = g.vertex_id(&vertex_name(group.u_block, 0)).unwrap();
            let v = g.vertex_id(&vertex_name(group.v_block, i)).unwrap();
            let wi = row.witness.eval(n, i);
            let w = g.vertex_id(&vertex_name(row.witness.block, wi)).unwrap();
            let (du, dv) = (d.get(u, w), d.get(v, w));
            let (verdict, alternates) = if du == dv {
                ok += 1;
                (Verdict::Verified, Vec::new())
            } else {
                let alts: Vec<String> = s
                    .iter()
                    .filter(|&&x| d.get(u, x) == d.get(v, x))
                    .map(|&x| g.vertex_name(x).to_string())
                    .collect();
                if alts.is_empty() {
                    failed += 1;
                    (Verdict::Failed, alts)
                } else {
                    repaired += 1;
                    (Verdict::Repaired, alts)
                }
            };
            rows.push(RowInstance {
                row: format!("({}0, {}_i) {}", group.u_block, group.v_block, row.label),
                i,
                u: g.vertex_name(u).to_string(),
                v: g.vertex_name(v).to_string(),
                witness: vertex_name(row.witness.block, wi),
                d_u: du,
                d_v: dv,
                verdict,
                alternates,
            });
        }
    }
    let verdict = if failed > 0 {
        Verdict::Failed
    } else if repaired > 0 {
        Verdict::Repaired
    } else {
        Verdict::Verified
    };
    ClaimResult {
        id,
        class: class.tag().to_string(),
        n,
        kind: ClaimKind::Table,
        verdict,
        detail: format!(
            "{ok} verified, {repaired} repaired, {failed} unrepairable of {} row instances; \
             'other odd/even' rows cover indices not matched by the group's listed specials",
            rows.len()
        ),
        rows,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FullReport {
    pub n_max: usize,
    pub verified: usize,
    pub repaired: usize,
    pub failed: usize,
    pub claims: Vec<ClaimResult>,
}

impl FullReport {
    /// True when a theorem-level claim failed: a published value did not
    /// check out, or a table row had no valid replacement witness. Refuted
    /// proof-step assertions are reported but do not trip this.
    pub fn has_failure(&self) -> bool {
        self.claims
            .iter()
            .any(|c| c.verdict == Verdict::Failed && c.kind.is_theorem_level())
    }
}

/// Every applicable claim for every class and every n in 5..=n_max,
/// deterministically ordered by claim id then n.
pub fn run_full_repro(
    n_max: usize,
    filter: Option<PolytopeClass>,
) -> Result<FullReport, ReproError> {
    if n_max < PROVEN_MIN_N {
        return Err(ReproError::NTooSmall {
            n: n_max,
            min: PROVEN_MIN_N,
        });
    }
    let mut claims = Vec::new();
    for class in PolytopeClass::ALL {
        if filter.is_some_and(|f| f != class) {
            continue;
        }
        for n in PROVEN_MIN_N..=n_max {
            if lemma_parity(class).admits(n) {
                let (g, d) = instance(class, n);
                claims.push(claim_empty_w(class, n, &g, &d));
                claims.push(claim_lower_bound(class, n, &g, &d));
                if theorem_parity(class).admits(n) {
                    claims.push(claim_equalizer_set(class, n, &g, &d));
                    claims.push(claim_exact(class, n, &g, &d));
                    claims.push(claim_table(class, n, &g, &d));
                }
            }
        }
    }
    claims.sort_by(|a, b| a.id.cmp(&b.id).then(a.n.cmp(&b.n)));
    let verified = claims
        .iter()
        .filter(|c| c.verdict == Verdict::Verified)
        .count();
    let repaired = claims
        .iter()
        .filter(|c| c.verdict == Verdict::Repaired)
        .count();
    let failed = claims
        .iter()
        .filter(|c| c.verdict == Verdict::Failed)
        .count();
    Ok(FullReport {
        n_max,
        verified,
        repaired,
        failed,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_sets_are_block_ranges() {
        assert_eq!(
            published_equalizer_set(PolytopeClass::T, 5),
            (0..10).collect::<Vec<_>>()
        );
        assert_eq!(published_equalizer_set(PolytopeClass::R2, 6).len(), 18);
        let s = published_equalizer_set(PolytopeClass::S, 7);
        assert_eq!(s.len(), 14);
        assert!(s.contains(&0) && s.contains(&20) && !s.contains(&7));
    }

    #[test]
    fn parity_gates() {
        assert!(matches!(
            verify_theorem(PolytopeClass::S, 6),
            Err(ReproError::ParityMismatch { .. })
        ));
        assert!(matches!(
            verify_table(PolytopeClass::R2, 7),
            Err(ReproError::ParityMismatch { .. })
        ));
        assert!(matches!(
            verify_theorem(PolytopeClass::T, 4),
            Err(ReproError::NTooSmall { .. })
        ));
        assert!(verify_theorem(PolytopeClass::T, 7).is_ok());
    }

    #[test]
    fn t5_theorem_verifies() {
        let claims = verify_theorem(PolytopeClass::T, 5).unwrap();
        assert_eq!(claims.len(), 3);
        for c in &claims {
            assert_eq!(c.verdict, Verdict::Verified, "{}: {}", c.id, c.detail);
        }
    }

    #[test]
    fn r2_odd_is_lower_bound_only() {
        let claims = verify_theorem(PolytopeClass::R2, 7).unwrap();
        assert_eq!(claims.len(), 1);
        assert_eq!(claims[0].id, "r2-lower-bound");
        assert_eq!(claims[0].verdict, Verdict::Verified, "{}", claims[0].detail);
    }

    #[test]
    fn empty_w_families_hold_except_t_second_family() {
        for (class, n) in [
            (PolytopeClass::R2, 6),
            (PolytopeClass::R2, 7),
            (PolytopeClass::S, 7),
            (PolytopeClass::S2, 5),
            (PolytopeClass::S2, 6),
        ] {
            let c = verify_empty_w_claims(class, n).unwrap();
            assert_eq!(c.verdict, Verdict::Verified, "{}: {}", c.id, c.detail);
        }
        // The published (a_i, d_(i-1)) family is refuted numerically: the
        // pair actually forced is (a_i, d_i). b2 equalizes a0 and d4 at n=5.
        let c = verify_empty_w_claims(PolytopeClass::T, 5).unwrap();
        assert_eq!(c.verdict, Verdict::Failed, "{}", c.detail);
        assert!(c.detail.contains("b2"), "{}", c.detail);
        assert!(!c.kind.is_theorem_level());
    }

    #[test]
    fn t_value_claims_stand_despite_refuted_proof_step() {
        // (a_i, d_i) is forced even though the published (a_i, d_(i-1)) is
        // not, so the matching still reaches 2n and the value claims hold.
        let report = run_full_repro(6, Some(PolytopeClass::T)).unwrap();
        assert!(!report.has_failure());
        assert_eq!(report.failed, 2); // the empty-W claim at n = 5 and 6
        for c in &report.claims {
            if c.kind.is_theorem_level() && c.kind != ClaimKind::Table {
                assert_eq!(c.verdict, Verdict::Verified, "{}: {}", c.id, c.detail);
            }
        }
    }
}
