//! Trivalent ribbon graphs and the gl_N weight system.
//!
//! A graph on `6n` darts is a fixed-point-free involution `alpha` (edges) and
//! a permutation `sigma` whose cycles all have length 3 (vertices, in
//! counterclockwise order). Marking a vertex reverses its 3-cycle.

mod enumerate;
mod format;
mod maps;

pub use enumerate::{
    abstract_canonical_form, enumerate_trivalent, graph_count_bounds, lemma_bounds_report,
    EnumerationReport, GraphCountRow, LemmaEntry, LemmaReport, MAX_ENUMERATION_DEGREE,
};
pub use format::{parse_ribbon_graph, write_ribbon_graph};
pub use maps::{count_rooted_maps, rooted_maps_table, tutte_planar, MAX_MAP_EDGES};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
}

/// One bit per vertex, in the order of [`RibbonGraph::vertices`].
pub type Marking = Vec<bool>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceClass {
    pub genus: u32,
    pub boundary: u32,
}

fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cyc.push(d);
            d = perm[d];
        }
        out.push(cyc);
    }
    out
}

pub(crate) fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut count = 0;
    for start in 0..perm.len() {
        if !seen[start] {
            count += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = perm[d];
            }
        }
    }
    count
}

impl RibbonGraph {
    /// Validate and build from an edge involution and a vertex rotation.
    pub fn new(alpha: Vec<usize>, sigma: Vec<usize>) -> Result<Self> {
        let n = alpha.len();
        if sigma.len() != n {
            return Err(Error::arg("alpha and sigma act on different dart sets"));
        }
        for (d, &a) in alpha.iter().enumerate() {
            if a >= n || a == d || alpha[a] != d {
                return Err(Error::arg(format!(
                    "edge involution is not fixed-point free at dart {d}"
                )));
            }
        }
        let mut hit = vec![false; n];
        for &s in &sigma {
            if s >= n || hit[s] {
                return Err(Error::arg("vertex rotation is not a permutation"));
            }
            hit[s] = true;
        }
        if cycles_of(&sigma).iter().any(|c| c.len() != 3) {
            return Err(Error::arg("every vertex must be trivalent"));
        }
        Ok(RibbonGraph { alpha, sigma })
    }

    /// Rotation `3v → 3v+1 → 3v+2` at every vertex.
    pub(crate) fn standard_sigma(darts: usize) -> Vec<usize> {
        (0..darts)
            .map(|d| if d % 3 == 2 { d - 2 } else { d + 1 })
            .collect()
    }

    pub(crate) fn from_alpha_standard(alpha: Vec<usize>) -> Self {
        let sigma = Self::standard_sigma(alpha.len());
        RibbonGraph { alpha, sigma }
    }

    pub fn empty() -> Self {
        RibbonGraph {
            alpha: Vec::new(),
            sigma: Vec::new(),
        }
    }

    /// The Θ-graph: two vertices joined by three edges.
    pub fn theta() -> Self {
        Self::from_alpha_standard(vec![3, 5, 4, 0, 2, 1])
    }

    /// Two loops joined by a bridge.
    pub fn dumbbell() -> Self {
        Self::from_alpha_standard(vec![3, 2, 1, 0, 5, 4])
    }

    pub fn darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Degree `n` (half the number of vertices).
    pub fn degree(&self) -> usize {
        self.darts() / 6
    }

    pub fn vertex_count(&self) -> usize {
        self.darts() / 3
    }

    pub fn edge_count(&self) -> usize {
        self.darts() / 2
    }

    /// Vertex cycles ordered by their smallest dart.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.sigma)
    }

    pub fn is_connected(&self) -> bool {
        if self.darts() == 0 {
            return true;
        }
        let mut seen = vec![false; self.darts()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [self.alpha[d], self.sigma[d]] {
                if !seen[e] {
                    seen[e] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == self.darts()
    }

    /// Rotation with every marked vertex reversed.
    pub fn flipped_sigma(&self, marking: &[bool]) -> Result<Vec<usize>> {
        let verts = self.vertices();
        if marking.len() != verts.len() {
            return Err(Error::arg(format!(
                "marking has {} bits for {} vertices",
                marking.len(),
                verts.len()
            )));
        }
        let mut s = self.sigma.clone();
        for (cyc, &m) in verts.iter().zip(marking) {
            if m {
                let (a, b, c) = (cyc[0], cyc[1], cyc[2]);
                s[a] = c;
                s[c] = b;
                s[b] = a;
            }
        }
        Ok(s)
    }

    /// All rotations reversed.
    pub fn mirror(&self) -> Self {
        let marking = vec![true; self.vertex_count()];
        RibbonGraph {
            alpha: self.alpha.clone(),
            sigma: self.flipped_sigma(&marking).expect("full marking"),
        }
    }

    /// Same graph with darts relabeled by `perm` (dart `d` becomes `perm[d]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.darts();
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        for d in 0..n {
            alpha[perm[d]] = perm[self.alpha[d]];
            sigma[perm[d]] = perm[self.sigma[d]];
        }
        RibbonGraph { alpha, sigma }
    }

    /// Boundary cycles of the thickened surface: cycles of `σ'∘α`.
    pub fn boundary_cycles(&self, marking: &[bool]) -> Result<Vec<Vec<usize>>> {
        let s = self.flipped_sigma(marking)?;
        let phi: Vec<usize> = (0..self.darts()).map(|d| s[self.alpha[d]]).collect();
        Ok(cycles_of(&phi))
    }

    /// Genus and boundary count of the surface obtained by thickening with the marking.
    pub fn classify_marking(&self, marking: &[bool]) -> Result<SurfaceClass> {
        if !self.is_connected() {
            return Err(Error::arg("classify_marking needs a connected graph"));
        }
        let b = self.boundary_cycles(marking)?.len() as i64;
        let n = self.degree() as i64;
        let twice_genus = n + 2 - b;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(Error::consistency(format!(
                "Euler characteristic gives genus ({twice_genus})/2"
            )));
        }
        Ok(SurfaceClass {
            genus: (twice_genus / 2) as u32,
            boundary: b as u32,
        })
    }

    /// Genus of the graph's own rotation system.
    pub fn genus(&self) -> Result<u32> {
        Ok(self
            .classify_marking(&vec![false; self.vertex_count()])?
            .genus)
    }

    /// `p_Γ(N) = Σ_M (−1)^{|M|} N^{b_M}` over all markings.
    pub fn weight_gl_n(&self) -> Result<GlWeight> {
        let v = self.vertex_count();
        if v == 0 {
            return Ok(GlWeight {
                coeffs: vec![BigInt::from(1)],
                hbar_exp: 0,
            });
        }
        if !self.is_connected() {
            return Err(Error::arg("weight_glN needs a connected graph"));
        }
        if v > 24 {
            return Err(Error::arg(
                "too many vertices for exhaustive marking enumeration",
            ));
        }
        let counts = (0u64..1 << v)
            .into_par_iter()
            .map(|bits| {
                let marking: Vec<bool> = (0..v).map(|i| bits >> i & 1 == 1).collect();
                let b = self.boundary_cycles(&marking).map(|c| c.len())?;
                let sign: i64 = if bits.count_ones() % 2 == 0 { 1 } else { -1 };
                let mut acc = vec![0i64; 3 * v + 1];
                acc[b] += sign;
                Ok(acc)
            })
            .try_reduce(
                || vec![0i64; 3 * v + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    Ok(a)
                },
            )?;
        let mut coeffs: Vec<BigInt> = counts.into_iter().map(BigInt::from).collect();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(GlWeight {
            coeffs,
            hbar_exp: self.degree() as u32,
        })
    }
}

/// `p_Γ(N)·ħ^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlWeight {
    /// Coefficients of `p_Γ`, lowest degree first.
    pub coeffs: Vec<BigInt>,
    pub hbar_exp: u32,
}

impl GlWeight {
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn eval(&self, n: i64) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    /// Polynomial text such as `"2*N^3 - 2*N"`.
    pub fn poly_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag == BigInt::from(1)) {
                (0, _) => mag.to_string(),
                (1, true) => "N".to_string(),
                (1, false) => format!("{mag}*N"),
                (_, true) => format!("N^{k}"),
                (_, false) => format!("{mag}*N^{k}"),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            "0".to_string()
        } else {
            out
        }
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*hbar^{}", self.poly_string(), self.hbar_exp)
    }
}

/// Canonical code of the map rooted at `root`: BFS labels in rotation order,
/// then `alpha` and `sigma` in the new labels. `None` if not every dart is reached.
pub(crate) fn rooted_code(g: &RibbonGraph, root: usize) -> Option<Vec<usize>> {
    let n = g.darts();
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let label_vertex = |start: usize, label: &mut Vec<usize>, order: &mut Vec<usize>| {
        let mut d = start;
        loop {
            label[d] = order.len();
            order.push(d);
            d = g.sigma[d];
            if d == start {
                break;
            }
        }
    };
    label_vertex(root, &mut label, &mut order);
    let mut i = 0;
    while i < order.len() {
        let partner = g.alpha[order[i]];
        if label[partner] == usize::MAX {
            label_vertex(partner, &mut label, &mut order);
        }
        i += 1;
    }
    if order.len() != n {
        return None;
    }
    let mut code = Vec::with_capacity(2 * n);
    code.extend(order.iter().map(|&d| label[g.alpha[d]]));
    code.extend(order.iter().map(|&d| label[g.sigma[d]]));
    Some(code)
}

/// Isomorphism-invariant code: the least rooted code over all roots.
pub fn canonical_form(g: &RibbonGraph) -> Vec<usize> {
    (0..g.darts())
        .filter_map(|r| rooted_code(g, r))
        .min()
        .unwrap_or_default()
}
