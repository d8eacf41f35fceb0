//! Crystal operators on MV polytopes, by two independent routes:
//!
//! * the Lusztig route (simply-laced only): bump the first entry of the
//!   Lusztig datum along a word starting with the letter, and re-propagate;
//! * the string route (all supported types): embed into a big enough
//!   highest-weight crystal, shift the first string entry along a word
//!   starting with the letter, and rebuild.
//!
//! Both implement the polytope description of f_j: the stable-vertex half
//! (w with s_j w < w) keeps its M values, the identity vertex drops by
//! alpha_j^vee. The starred operators conjugate by the polytope negation,
//! which realizes the Kashiwara involution.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::bz::{bz_from_lusztig, embed_in_crystal, BZDatum};
use crate::error::{Error, Result};
use crate::string_data::{kashiwara_datum, string_to_bz};
use crate::RootSystem;

/// Default cap on crystal-graph node counts.
pub const NODE_CAP: usize = 100_000;

fn sub_coroot(mu: &[i64], j: usize) -> Vec<i64> {
    let mut out = mu.to_vec();
    out[j] -= 1;
    out
}

fn add_coroot(mu: &[i64], j: usize) -> Vec<i64> {
    let mut out = mu.to_vec();
    out[j] += 1;
    out
}

/// f_j by Lusztig-datum propagation. Keeps mu_{w_0} fixed; total on every
/// valid datum. Simply-laced types only.
pub fn f_lusztig(bz: &BZDatum, j: usize) -> Result<BZDatum> {
    let sys = &bz.sys;
    let word = sys.weyl.w0_word_starting(j);
    let mut n = bz.lusztig_datum(&word)?;
    n[0] += 1;
    bz_from_lusztig(sys, &word, &n, &sub_coroot(&bz.mu_e(), j))
}

/// e_j by Lusztig-datum propagation; None when the datum is at the top of
/// its j-string (first Lusztig entry zero). Simply-laced types only.
pub fn e_lusztig(bz: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
    let sys = &bz.sys;
    let word = sys.weyl.w0_word_starting(j);
    let mut n = bz.lusztig_datum(&word)?;
    if n[0] == 0 {
        return Ok(None);
    }
    n[0] -= 1;
    Ok(Some(bz_from_lusztig(sys, &word, &n, &add_coroot(&bz.mu_e(), j))?))
}

/// f_j by the string route: embed so that p_1 >= 1 survives the shift, then
/// rebuild with (p_1 - 1, p_2, ...) from mu_e - alpha_j^vee, and translate
/// back to the caller's frame.
pub fn f_string(bz: &BZDatum, j: usize) -> Result<BZDatum> {
    let sys = &bz.sys;
    if j >= sys.rank() {
        return Err(Error::Precondition(format!("letter {} out of range", j + 1)));
    }
    let (emb, lam) = embed_in_crystal(bz, Some(j));
    let word = sys.weyl.w0_word_starting(j);
    let mut p = kashiwara_datum(&emb, &word)?;
    assert!(p[0] >= 1, "embedding guarantees room for the lowering step");
    p[0] -= 1;
    let out = string_to_bz(sys, &word, &p, &sub_coroot(&emb.mu_e(), j))?;
    // Back to the input frame: out has top lam, the input top is bz.mu_w0().
    let shift: Vec<i64> = bz.mu_w0().iter().zip(&lam).map(|(t, l)| t - l).collect();
    Ok(out.translate(&shift))
}

/// e_j by the string route; None exactly when the j-edge at the identity
/// has length zero (mu_e = mu_{s_j}).
pub fn e_string(bz: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
    let sys = &bz.sys;
    if j >= sys.rank() {
        return Err(Error::Precondition(format!("letter {} out of range", j + 1)));
    }
    if bz.edge_length(sys.weyl.identity(), j) == 0 {
        return Ok(None);
    }
    let (emb, lam) = embed_in_crystal(bz, None);
    let word = sys.weyl.w0_word_starting(j);
    let mut p = kashiwara_datum(&emb, &word)?;
    p[0] += 1;
    let out = string_to_bz(sys, &word, &p, &add_coroot(&emb.mu_e(), j))?;
    let shift: Vec<i64> = bz.mu_w0().iter().zip(&lam).map(|(t, l)| t - l).collect();
    Ok(Some(out.translate(&shift)))
}

/// f_j, dispatching to the Lusztig route when available.
pub fn f_polytope(bz: &BZDatum, j: usize) -> Result<BZDatum> {
    if bz.sys.datum.is_simply_laced() {
        f_lusztig(bz, j)
    } else {
        f_string(bz, j)
    }
}

/// e_j, dispatching to the Lusztig route when available.
pub fn e_polytope(bz: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
    if bz.sys.datum.is_simply_laced() {
        e_lusztig(bz, j)
    } else {
        e_string(bz, j)
    }
}

/// Starred lowering operator f*_j = * f_j *: conjugate by the polytope
/// negation. In the raw frame it keeps mu_e and raises mu_{w_0} by
/// alpha_j^vee, so after stable normalization the weight drops by
/// alpha_j^vee just like f_j.
pub fn f_star_polytope(bz: &BZDatum, j: usize) -> Result<BZDatum> {
    Ok(f_polytope(&bz.negate(), j)?.negate())
}

/// Starred raising operator e*_j = * e_j *; None exactly when
/// mu_{w_0 s_j} = mu_{w_0}.
pub fn e_star_polytope(bz: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
    Ok(e_polytope(&bz.negate(), j)?.map(|out| out.negate()))
}

/// An element of B(infinity): the stable representative of a polytope
/// (mu_{w_0} = 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalElement {
    bz: BZDatum,
}

impl CrystalElement {
    pub fn new(bz: &BZDatum) -> Self {
        Self { bz: bz.stable_normalize() }
    }

    /// The highest element: the origin point polytope.
    pub fn top(sys: &Arc<RootSystem>) -> Self {
        Self { bz: BZDatum::point(sys, &vec![0; sys.rank()]) }
    }

    pub fn bz(&self) -> &BZDatum {
        &self.bz
    }

    /// Crystal weight (as a coweight, nonpositive on B(infinity)): mu_e of
    /// the stable representative.
    pub fn weight(&self) -> Vec<i64> {
        self.bz.mu_e()
    }

    pub fn f(&self, j: usize) -> Result<Self> {
        Ok(Self::new(&f_polytope(&self.bz, j)?))
    }

    pub fn e(&self, j: usize) -> Result<Option<Self>> {
        Ok(e_polytope(&self.bz, j)?.map(|out| Self::new(&out)))
    }

    pub fn f_star(&self, j: usize) -> Result<Self> {
        Ok(Self::new(&f_star_polytope(&self.bz, j)?))
    }

    pub fn e_star(&self, j: usize) -> Result<Option<Self>> {
        Ok(e_star_polytope(&self.bz, j)?.map(|out| Self::new(&out)))
    }

    /// Identity key: the stable M values in canonical chamber-weight order.
    pub fn key(&self) -> Vec<i64> {
        self.bz.values().to_vec()
    }
}

/// A finite piece of a crystal graph with deterministic node order.
#[derive(Debug)]
pub struct CrystalGraph {
    pub sys: Arc<RootSystem>,
    /// Reduced word of w_0 used for the Lusztig labels.
    pub word: Vec<usize>,
    pub nodes: Vec<CrystalNode>,
    /// (from, letter, to), sorted.
    pub edges: Vec<(usize, usize, usize)>,
    pub root: usize,
}

#[derive(Debug)]
pub struct CrystalNode {
    /// For highest-weight crystals: the representative with top vertex
    /// lambda. For B(infinity): the stable representative.
    pub bz: BZDatum,
    /// mu_e of the representative (the crystal weight).
    pub weight: Vec<i64>,
    pub lusztig: Vec<i64>,
    /// Lowering distance from the root.
    pub depth: usize,
}

/// The full highest-weight crystal B(lambda) for a dominant coweight lambda,
/// built by lowering from the point polytope at lambda and keeping the
/// members of B(lambda).
pub fn hw_crystal_graph(
    sys: &Arc<RootSystem>,
    lambda: &[i64],
    word: Option<Vec<usize>>,
    cap: usize,
) -> Result<CrystalGraph> {
    if lambda.len() != sys.rank() {
        return Err(Error::Precondition("lambda has the wrong rank".into()));
    }
    if !sys.datum.is_dominant_coweight(lambda) {
        return Err(Error::Precondition(format!(
            "lambda = {lambda:?} is not dominant"
        )));
    }
    let word = match word {
        Some(w) => {
            sys.weyl.w0_word_path(&w)?;
            w
        }
        None => sys.weyl.lex_least_word(sys.weyl.w0()),
    };
    let root = BZDatum::point(sys, lambda);
    debug_assert!(root.in_crystal_lambda(lambda).unwrap());
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut raw_nodes: Vec<(BZDatum, usize)> = Vec::new();
    index.insert(root.values().to_vec(), 0);
    raw_nodes.push((root, 0));
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(u) = queue.pop_front() {
        for j in 0..sys.rank() {
            let child = f_polytope(&raw_nodes[u].0, j)?;
            if !child.in_crystal_lambda(lambda)? {
                continue;
            }
            let key = child.values().to_vec();
            let v = match index.get(&key) {
                Some(&v) => v,
                None => {
                    let v = raw_nodes.len();
                    if v >= cap {
                        return Err(Error::CapExceeded(format!(
                            "crystal graph larger than cap {cap}"
                        )));
                    }
                    let depth = raw_nodes[u].1 + 1;
                    index.insert(key, v);
                    raw_nodes.push((child, depth));
                    queue.push_back(v);
                    v
                }
            };
            raw_edges.push((u, j, v));
        }
    }
    finish_graph(sys, word, raw_nodes, raw_edges)
}

/// The elements of B(infinity) reachable from the top by at most `depth`
/// lowering operators, with the lowering edges discovered among them.
pub fn binf_graph(
    sys: &Arc<RootSystem>,
    depth: usize,
    word: Option<Vec<usize>>,
    cap: usize,
) -> Result<CrystalGraph> {
    let word = match word {
        Some(w) => {
            sys.weyl.w0_word_path(&w)?;
            w
        }
        None => sys.weyl.lex_least_word(sys.weyl.w0()),
    };
    let top = CrystalElement::top(sys);
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut raw_nodes: Vec<(BZDatum, usize)> = Vec::new();
    index.insert(top.key(), 0);
    raw_nodes.push((top.bz().clone(), 0));
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(u) = queue.pop_front() {
        let d = raw_nodes[u].1;
        if d == depth {
            continue;
        }
        for j in 0..sys.rank() {
            let elem = CrystalElement { bz: raw_nodes[u].0.clone() };
            let child = elem.f(j)?;
            let key = child.key();
            let v = match index.get(&key) {
                Some(&v) => v,
                None => {
                    let v = raw_nodes.len();
                    if v >= cap {
                        return Err(Error::CapExceeded(format!(
                            "crystal graph larger than cap {cap}"
                        )));
                    }
                    index.insert(key, v);
                    raw_nodes.push((child.bz().clone(), d + 1));
                    queue.push_back(v);
                    v
                }
            };
            raw_edges.push((u, j, v));
        }
    }
    finish_graph(sys, word, raw_nodes, raw_edges)
}

/// Sort nodes canonically (depth, then M values), remap edges, compute
/// labels.
fn finish_graph(
    sys: &Arc<RootSystem>,
    word: Vec<usize>,
    raw_nodes: Vec<(BZDatum, usize)>,
    raw_edges: Vec<(usize, usize, usize)>,
) -> Result<CrystalGraph> {
    let mut order: Vec<usize> = (0..raw_nodes.len()).collect();
    order.sort_by(|&a, &b| {
        (raw_nodes[a].1, raw_nodes[a].0.values()).cmp(&(raw_nodes[b].1, raw_nodes[b].0.values()))
    });
    let mut rank_of = vec![0usize; raw_nodes.len()];
    for (new, &old) in order.iter().enumerate() {
        rank_of[old] = new;
    }
    let mut nodes = Vec::with_capacity(raw_nodes.len());
    let mut by_old: Vec<Option<(BZDatum, usize)>> = raw_nodes.into_iter().map(Some).collect();
    for &old in &order {
        let (bz, depth) = by_old[old].take().expect("each node moved once");
        let lusztig = bz.lusztig_datum(&word)?;
        let weight = bz.mu_e();
        nodes.push(CrystalNode { bz, weight, lusztig, depth });
    }
    let mut edges: Vec<(usize, usize, usize)> = raw_edges
        .into_iter()
        .map(|(u, j, v)| (rank_of[u], j, rank_of[v]))
        .collect();
    edges.sort_unstable();
    let root = rank_of[0];
    debug_assert_eq!(root, 0, "the root sorts first (unique depth-0 node)");
    Ok(CrystalGraph { sys: Arc::clone(sys), word, nodes, edges, root })
}
