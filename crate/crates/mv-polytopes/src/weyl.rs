//! Weyl group enumeration, chamber weights, and reduced-word plumbing.
//!
//! Group elements are stored as their integer matrices acting on the
//! fundamental-weight basis (column l of `w` is `w Lambda_l`). Lengths come
//! out of the breadth-first enumeration. The coweight action of `w` is the
//! transpose of the weight action of `w^{-1}`, which keeps everything in
//! integer matrices that were already computed.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::root_datum::{CartanMatrix, Coweight, RootDatum, Weight};

/// Default cap on the number of Weyl group elements (guards user-supplied
/// Cartan matrices; every built-in type is far below it).
pub const WEYL_GROUP_CAP: usize = 100_000;

/// Default cap on the rank for which all reduced words of w_0 may be listed.
pub const WORD_ENUM_RANK_CAP: usize = 5;

#[derive(Debug)]
pub struct WeylGroup {
    rank: usize,
    /// Row-major rank x rank weight-action matrices.
    mats: Vec<Vec<i64>>,
    lens: Vec<u32>,
    /// right[w][i] = index of w s_i.
    right: Vec<Vec<usize>>,
    /// left[w][i] = index of s_i w.
    left: Vec<Vec<usize>>,
    inv: Vec<usize>,
    w0: usize,
}

impl WeylGroup {
    pub fn enumerate(datum: &RootDatum, cap: usize) -> Result<Self> {
        let r = datum.rank();
        let a = datum.cartan();
        let id: Vec<i64> = identity(r);
        let mut mats = vec![id.clone()];
        let mut lens = vec![0u32];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        index.insert(id, 0);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &w in &frontier {
                let mut row = vec![usize::MAX; r];
                for i in 0..r {
                    let m = mul_right_simple(&mats[w], r, a, i);
                    let idx = match index.get(&m) {
                        Some(&idx) => idx,
                        None => {
                            let idx = mats.len();
                            if idx >= cap {
                                return Err(Error::CapExceeded(format!(
                                    "Weyl group larger than cap {cap}"
                                )));
                            }
                            mats.push(m.clone());
                            lens.push(lens[w] + 1);
                            index.insert(m, idx);
                            next.push(idx);
                            idx
                        }
                    };
                    row[i] = idx;
                }
                right.push(row);
            }
            frontier = next;
        }
        // `right` rows were pushed in BFS order, which is also index order.
        assert_eq!(right.len(), mats.len());
        let n = mats.len();
        let mut left = vec![vec![usize::MAX; r]; n];
        for w in 0..n {
            for i in 0..r {
                let m = mul_left_simple(&mats[w], r, a, i);
                left[w][i] = *index.get(&m).expect("s_i w stays in the group");
            }
        }
        let mut inv = vec![usize::MAX; n];
        inv[0] = 0;
        // BFS order guarantees the parent's inverse is known first.
        for w in 0..n {
            for i in 0..r {
                let v = right[w][i];
                if lens[v] == lens[w] + 1 && inv[v] == usize::MAX {
                    inv[v] = left[inv[w]][i];
                }
            }
        }
        assert!(inv.iter().all(|&x| x != usize::MAX));
        let max_len = *lens.iter().max().expect("nonempty group");
        let longest: Vec<usize> = (0..n).filter(|&w| lens[w] == max_len).collect();
        assert_eq!(longest.len(), 1, "finite Weyl group has a unique longest element");
        Ok(Self {
            rank: r,
            mats,
            lens,
            right,
            left,
            inv,
            w0: longest[0],
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.mats.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn w0(&self) -> usize {
        self.w0
    }

    pub fn length(&self, w: usize) -> usize {
        self.lens[w] as usize
    }

    /// Number of positive roots = length of w_0.
    pub fn longest_length(&self) -> usize {
        self.length(self.w0)
    }

    pub fn right_mul(&self, w: usize, i: usize) -> usize {
        self.right[w][i]
    }

    pub fn left_mul(&self, w: usize, i: usize) -> usize {
        self.left[w][i]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w]
    }

    pub fn descent_right(&self, w: usize, i: usize) -> bool {
        self.lens[self.right[w][i]] < self.lens[w]
    }

    pub fn descent_left(&self, w: usize, i: usize) -> bool {
        self.lens[self.left[w][i]] < self.lens[w]
    }

    pub fn act_weight(&self, w: usize, lam: &[i64]) -> Weight {
        let r = self.rank;
        let m = &self.mats[w];
        (0..r).map(|k| (0..r).map(|l| m[k * r + l] * lam[l]).sum()).collect()
    }

    pub fn act_coweight(&self, w: usize, mu: &[i64]) -> Coweight {
        let r = self.rank;
        let m = &self.mats[self.inv[w]];
        (0..r).map(|k| (0..r).map(|l| mu[l] * m[l * r + k]).sum()).collect()
    }

    /// Element reached from the identity by a word (letters are 0-based).
    pub fn element_of_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |w, &i| self.right[w][i])
    }

    /// The lexicographically least reduced word of `w` (greedy smallest left
    /// descent).
    pub fn lex_least_word(&self, mut w: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        while w != 0 {
            let i = (0..self.rank)
                .find(|&i| self.descent_left(w, i))
                .expect("non-identity element has a left descent");
            out.push(i);
            w = self.left[w][i];
        }
        out
    }

    /// Lexicographically least reduced word of w_0 that starts with the
    /// letter `j`.
    pub fn w0_word_starting(&self, j: usize) -> Vec<usize> {
        assert!(j < self.rank, "letter out of range");
        // Every letter is a left descent of w_0.
        let mut word = vec![j];
        word.extend(self.lex_least_word(self.left[self.w0][j]));
        word
    }

    /// All reduced words of `w`, depth-first by smallest descent. The rank
    /// cap guards against the combinatorial explosion in high rank.
    pub fn reduced_words(&self, w: usize, rank_cap: usize) -> Result<Vec<Vec<usize>>> {
        if self.rank > rank_cap {
            return Err(Error::CapExceeded(format!(
                "reduced-word enumeration capped at rank {rank_cap}"
            )));
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.words_rec(w, &mut prefix, &mut out);
        Ok(out)
    }

    fn words_rec(&self, w: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in 0..self.rank {
            if self.descent_left(w, i) {
                prefix.push(i);
                self.words_rec(self.left[w][i], prefix, out);
                prefix.pop();
            }
        }
    }

    /// Check that `word` is a reduced word for w_0 and return the walk
    /// `e = w_0, w_1, ..., w_m = w_0-element` along it.
    pub fn w0_word_path(&self, word: &[usize]) -> Result<Vec<usize>> {
        if word.len() != self.longest_length() {
            return Err(Error::Precondition(format!(
                "word length {} != number of positive roots {}",
                word.len(),
                self.longest_length()
            )));
        }
        let mut path = Vec::with_capacity(word.len() + 1);
        let mut w = 0usize;
        path.push(w);
        for &i in word {
            if i >= self.rank {
                return Err(Error::Precondition(format!("letter {} out of range", i + 1)));
            }
            if self.descent_right(w, i) {
                return Err(Error::Precondition("word is not reduced".into()));
            }
            w = self.right[w][i];
            path.push(w);
        }
        debug_assert_eq!(w, self.w0);
        Ok(path)
    }
}

fn identity(r: usize) -> Vec<i64> {
    let mut m = vec![0i64; r * r];
    for k in 0..r {
        m[k * r + k] = 1;
    }
    m
}

/// M * M_{s_i}: replaces column i by col_i - sum_l a[l][i] col_l.
fn mul_right_simple(m: &[i64], r: usize, a: &CartanMatrix, i: usize) -> Vec<i64> {
    let mut out = m.to_vec();
    for k in 0..r {
        let mut v = m[k * r + i];
        for l in 0..r {
            v -= a.entry(l, i) * m[k * r + l];
        }
        out[k * r + i] = v;
    }
    out
}

/// M_{s_i} * M: row k becomes row_k - a[k][i] * row_i (row i itself flips
/// sign via a[i][i] = 2).
fn mul_left_simple(m: &[i64], r: usize, a: &CartanMatrix, i: usize) -> Vec<i64> {
    let mut out = m.to_vec();
    for k in 0..r {
        let c = a.entry(k, i);
        if c == 0 {
            continue;
        }
        for l in 0..r {
            out[k * r + l] = m[k * r + l] - c * m[i * r + l];
        }
    }
    out
}

/// A chamber weight `w Lambda_i` keyed by its weight coordinates; `level` is
/// the fundamental weight it comes from (well defined because the orbits of
/// distinct fundamental weights are disjoint).
#[derive(Debug, Clone)]
pub struct ChamberWeight {
    pub weight: Weight,
    pub level: usize,
}

/// The full set of chamber weights of a root datum, in a canonical order
/// (level, then lexicographic on coordinates), with the orbit table and the
/// negation/duality bookkeeping.
#[derive(Debug)]
pub struct Gamma {
    pub items: Vec<ChamberWeight>,
    index: HashMap<Weight, usize>,
    /// orbit[w][i] = index of w Lambda_i.
    orbit: Vec<Vec<usize>>,
    /// neg[g] = index of -gamma.
    neg: Vec<usize>,
    /// Dynkin involution: -w_0 alpha_i = alpha_{eta[i]}.
    pub eta: Vec<usize>,
}

impl Gamma {
    pub fn build(datum: &RootDatum, weyl: &WeylGroup) -> Self {
        let r = datum.rank();
        let n = weyl.order();
        let mut raw: Vec<(Weight, usize)> = Vec::new();
        let mut seen: HashMap<Weight, usize> = HashMap::new();
        for i in 0..r {
            let mut lam = vec![0i64; r];
            lam[i] = 1;
            for w in 0..n {
                let wl = weyl.act_weight(w, &lam);
                if let Some(&lvl) = seen.get(&wl) {
                    assert_eq!(lvl, i, "fundamental-weight orbits must be disjoint");
                } else {
                    seen.insert(wl.clone(), i);
                    raw.push((wl, i));
                }
            }
        }
        raw.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        let items: Vec<ChamberWeight> = raw
            .into_iter()
            .map(|(weight, level)| ChamberWeight { weight, level })
            .collect();
        let mut index = HashMap::new();
        for (g, cw) in items.iter().enumerate() {
            index.insert(cw.weight.clone(), g);
        }
        let mut orbit = vec![vec![usize::MAX; r]; n];
        for w in 0..n {
            for i in 0..r {
                let mut lam = vec![0i64; r];
                lam[i] = 1;
                let wl = weyl.act_weight(w, &lam);
                orbit[w][i] = index[&wl];
            }
        }
        let neg: Vec<usize> = items
            .iter()
            .map(|cw| {
                let negw: Weight = cw.weight.iter().map(|&x| -x).collect();
                *index.get(&negw).expect("-w Lambda_i is again a chamber weight")
            })
            .collect();
        let mut eta = vec![usize::MAX; r];
        for i in 0..r {
            let root = datum.simple_root(i);
            let img: Weight = weyl.act_weight(weyl.w0(), &root).iter().map(|&x| -x).collect();
            let j = (0..r)
                .find(|&j| datum.simple_root(j) == img)
                .expect("-w_0 permutes the simple roots");
            eta[i] = j;
            // Consistency: -w_0 Lambda_i = Lambda_{eta(i)} ... as weights,
            // w_0 Lambda_i = -Lambda_{eta(i)}.
            let mut lam = vec![0i64; r];
            lam[i] = 1;
            let w0lam = weyl.act_weight(weyl.w0(), &lam);
            let mut expect = vec![0i64; r];
            expect[j] = -1;
            assert_eq!(w0lam, expect, "duality involution must match on fundamental weights");
        }
        Self {
            items,
            index,
            orbit,
            neg,
            eta,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn of(&self, w: usize, i: usize) -> usize {
        self.orbit[w][i]
    }

    pub fn lookup(&self, weight: &[i64]) -> Option<usize> {
        self.index.get(weight).copied()
    }

    pub fn negated(&self, g: usize) -> usize {
        self.neg[g]
    }

    /// Mask over the chamber weights: true for the set stable under the
    /// lowering direction j, i.e. gammas of the form w Lambda_i with
    /// s_j w < w.
    pub fn upper_mask(&self, weyl: &WeylGroup, j: usize) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        for w in 0..weyl.order() {
            if weyl.descent_left(w, j) {
                for i in 0..weyl.rank() {
                    mask[self.orbit[w][i]] = true;
                }
            }
        }
        mask
    }
}

/// A single braid move: replace the alternating block of length `d` starting
/// at `pos` by the block with the two letters exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidMove {
    pub pos: usize,
    pub d: usize,
}

/// All braid moves applicable to `word`.
pub fn braid_moves(cartan: &CartanMatrix, word: &[usize]) -> Vec<BraidMove> {
    let mut out = Vec::new();
    for pos in 0..word.len().saturating_sub(1) {
        let i = word[pos];
        let j = word[pos + 1];
        if i == j {
            continue;
        }
        let d = cartan.braid_order(i, j);
        if pos + d > word.len() {
            continue;
        }
        let alternating = (0..d).all(|t| word[pos + t] == if t % 2 == 0 { i } else { j });
        if alternating {
            out.push(BraidMove { pos, d });
        }
    }
    out
}

pub fn apply_braid(word: &[usize], mv: BraidMove) -> Vec<usize> {
    let i = word[mv.pos];
    let j = word[mv.pos + 1];
    let mut out = word.to_vec();
    for t in 0..mv.d {
        out[mv.pos + t] = if t % 2 == 0 { j } else { i };
    }
    out
}
