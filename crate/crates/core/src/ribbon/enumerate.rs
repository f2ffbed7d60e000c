//! Exhaustive generation of connected trivalent ribbon graphs.
//!
//! Rooted maps are generated directly in their BFS labeling: the smallest
//! unmatched dart is glued either to a later unmatched dart or to the first
//! dart of a fresh vertex. Every rooted connected map arises exactly once;
//! isomorphism classes are then separated by [`canonical_form`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{canonical_form, count_rooted_maps, GlWeight, RibbonGraph};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_DEGREE: usize = 4;

const FREE: usize = usize::MAX;

fn generate(alpha: &mut Vec<usize>, vertices: usize, target: usize, out: &mut Vec<Vec<usize>>) {
    let open = 3 * vertices;
    let Some(d) = (0..open).find(|&i| alpha[i] == FREE) else {
        if vertices == target {
            out.push(alpha[..open].to_vec());
        }
        return;
    };
    for e in d + 1..open {
        if alpha[e] == FREE {
            alpha[d] = e;
            alpha[e] = d;
            generate(alpha, vertices, target, out);
            alpha[d] = FREE;
            alpha[e] = FREE;
        }
    }
    if vertices < target {
        let first = open;
        alpha[d] = first;
        alpha[first] = d;
        generate(alpha, vertices + 1, target, out);
        alpha[d] = FREE;
        alpha[first] = FREE;
    }
}

/// All rooted connected trivalent maps with `2n` vertices, in BFS labeling.
pub(crate) fn rooted_trivalent(n: usize) -> Vec<RibbonGraph> {
    if n == 0 {
        return Vec::new();
    }
    let target = 2 * n;
    let mut alpha = vec![FREE; 3 * target];
    let mut out = Vec::new();
    generate(&mut alpha, 1, target, &mut out);
    out.into_iter()
        .map(RibbonGraph::from_alpha_standard)
        .collect()
}

/// Canonical form of the underlying abstract graph: least ribbon form over all vertex flips.
pub fn abstract_canonical_form(g: &RibbonGraph) -> Vec<usize> {
    let v = g.vertex_count();
    (0u64..1 << v)
        .map(|bits| {
            let marking: Vec<bool> = (0..v).map(|i| bits >> i & 1 == 1).collect();
            let sigma = g
                .flipped_sigma(&marking)
                .expect("marking sized to vertices");
            canonical_form(&RibbonGraph {
                alpha: g.alpha.clone(),
                sigma,
            })
        })
        .min()
        .unwrap_or_default()
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCount {
    pub degree: usize,
    pub rooted_maps: usize,
    pub ribbon_graphs: usize,
    pub abstract_graphs: usize,
}

#[derive(Clone, Debug)]
pub struct EnumerationReport {
    /// One representative per isomorphism class, by degree then canonical form.
    pub graphs: Vec<RibbonGraph>,
    pub counts: Vec<DegreeCount>,
}

fn check_degree(n_max: usize) -> Result<()> {
    if n_max > MAX_ENUMERATION_DEGREE {
        return Err(Error::arg(format!(
            "enumeration is limited to degree <= {MAX_ENUMERATION_DEGREE} (asked for {n_max})"
        )));
    }
    Ok(())
}

/// Connected trivalent ribbon graphs of degree `1..=n_max` up to isomorphism.
pub fn enumerate_trivalent(n_max: usize) -> Result<EnumerationReport> {
    check_degree(n_max)?;
    let mut graphs = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=n_max {
        let rooted = rooted_trivalent(n);
        let classes: BTreeMap<Vec<usize>, RibbonGraph> = rooted
            .par_iter()
            .map(|g| (canonical_form(g), g.clone()))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        let reps: Vec<RibbonGraph> = classes.into_values().collect();
        let abstract_forms: BTreeSet<Vec<usize>> =
            reps.par_iter().map(abstract_canonical_form).collect();
        counts.push(DegreeCount {
            degree: n,
            rooted_maps: rooted.len(),
            ribbon_graphs: reps.len(),
            abstract_graphs: abstract_forms.len(),
        });
        graphs.extend(reps);
    }
    Ok(EnumerationReport { graphs, counts })
}

#[derive(Clone, Debug)]
pub struct LemmaEntry {
    pub degree: usize,
    pub weight: GlWeight,
    pub poly_degree: usize,
    pub l1_norm: BigInt,
}

impl LemmaEntry {
    pub fn degree_ok(&self) -> bool {
        self.poly_degree <= self.degree + 2
    }

    /// `ℓ¹ ≤ 2^{2n}`, the number of markings.
    pub fn marking_bound_ok(&self) -> bool {
        self.l1_norm <= BigInt::from(1u64) << (2 * self.degree)
    }

    /// `ℓ¹ ≤ 2^n`.
    pub fn sharp_bound_ok(&self) -> bool {
        self.l1_norm <= BigInt::from(1u64) << self.degree
    }
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub entries: Vec<LemmaEntry>,
    /// `(graph, marking)` pairs checked against `2g − 2 + b = n`.
    pub identity_pairs: u64,
    pub identity_failures: u64,
}

impl LemmaReport {
    pub fn degree_violations(&self) -> usize {
        self.entries.iter().filter(|e| !e.degree_ok()).count()
    }

    pub fn marking_bound_violations(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| !e.marking_bound_ok())
            .count()
    }

    pub fn sharp_bound_violations(&self) -> usize {
        self.entries.iter().filter(|e| !e.sharp_bound_ok()).count()
    }
}

/// Degree and ℓ¹ checks on `p_Γ` for every graph of degree `≤ n_max`, plus the
/// exhaustive degree identity over all markings.
pub fn lemma_bounds_report(n_max: usize) -> Result<LemmaReport> {
    let report = enumerate_trivalent(n_max)?;
    let rows = report
        .graphs
        .par_iter()
        .map(|g| {
            let n = g.degree();
            let v = g.vertex_count();
            let mut failures = 0u64;
            for bits in 0u64..1 << v {
                let marking: Vec<bool> = (0..v).map(|i| bits >> i & 1 == 1).collect();
                let ok = match g.classify_marking(&marking) {
                    Ok(c) => 2 * c.genus as i64 - 2 + c.boundary as i64 == n as i64,
                    Err(_) => false,
                };
                failures += u64::from(!ok);
            }
            let weight = g.weight_gl_n()?;
            Ok((
                LemmaEntry {
                    degree: n,
                    poly_degree: weight.degree(),
                    l1_norm: weight.l1_norm(),
                    weight,
                },
                1u64 << v,
                failures,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = LemmaReport {
        entries: Vec::with_capacity(rows.len()),
        identity_pairs: 0,
        identity_failures: 0,
    };
    for (e, pairs, fails) in rows {
        out.entries.push(e);
        out.identity_pairs += pairs;
        out.identity_failures += fails;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphCountRow {
    pub genus: u32,
    /// Ribbon graphs of degree `n` whose own rotation system has this genus.
    pub ribbon_graphs: usize,
    /// Abstract graphs of degree `n` admitting a rotation system of this genus.
    pub abstract_graphs: usize,
    /// `12n·T_g(3n)`.
    pub bound: u64,
}

impl GraphCountRow {
    pub fn ribbon_ok(&self) -> bool {
        self.ribbon_graphs as u64 <= self.bound
    }

    pub fn abstract_ok(&self) -> bool {
        self.abstract_graphs as u64 <= self.bound
    }
}

/// Graph counts per genus at degree `n` against `12n·T_g(3n)`; needs `3n` within brute-force range.
pub fn graph_count_bounds(n: usize) -> Result<Vec<GraphCountRow>> {
    check_degree(n)?;
    if n == 0 || 3 * n > super::MAX_MAP_EDGES {
        return Err(Error::arg(format!(
            "T_g(3n) is brute-forced only for 3n <= {}",
            super::MAX_MAP_EDGES
        )));
    }
    let report = enumerate_trivalent(n)?;
    let graphs: Vec<&RibbonGraph> = report.graphs.iter().filter(|g| g.degree() == n).collect();
    let mut ribbon: BTreeMap<u32, usize> = BTreeMap::new();
    let mut abstract_genera: HashMap<Vec<usize>, BTreeSet<u32>> = HashMap::new();
    for g in &graphs {
        *ribbon.entry(g.genus()?).or_default() += 1;
        let v = g.vertex_count();
        let genera = abstract_genera
            .entry(abstract_canonical_form(g))
            .or_default();
        for bits in 0u64..1 << v {
            let marking: Vec<bool> = (0..v).map(|i| bits >> i & 1 == 1).collect();
            genera.insert(g.classify_marking(&marking)?.genus);
        }
    }
    let max_genus = (n as u32 + 2) / 2;
    (0..=max_genus)
        .map(|genus| {
            Ok(GraphCountRow {
                genus,
                ribbon_graphs: ribbon.get(&genus).copied().unwrap_or(0),
                abstract_graphs: abstract_genera
                    .values()
                    .filter(|s| s.contains(&genus))
                    .count(),
                bound: 12 * n as u64 * count_rooted_maps(genus, 3 * n)?,
            })
        })
        .collect()
}
