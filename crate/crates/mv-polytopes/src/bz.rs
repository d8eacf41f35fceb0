//! BZ data: integer collections (M_gamma) indexed by the chamber weights,
//! with the defining edge inequalities and tropical Plucker relations, the
//! GGMS vertices, Lusztig data, and the tropical propagation that rebuilds a
//! whole datum from one Lusztig datum in the simply-laced case.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_datum::Coweight;
use crate::weyl::{apply_braid, braid_moves};
use crate::RootSystem;

/// A BZ datum: one integer per chamber weight, in the canonical
/// chamber-weight order of the root system.
#[derive(Debug, Clone)]
pub struct BZDatum {
    pub sys: Arc<RootSystem>,
    m: Vec<i64>,
}

impl PartialEq for BZDatum {
    fn eq(&self, other: &Self) -> bool {
        self.sys.datum.cartan() == other.sys.datum.cartan() && self.m == other.m
    }
}

impl Eq for BZDatum {}

/// One failed edge inequality: n(w, i) < 0.
#[derive(Debug, Clone)]
pub struct EdgeViolation {
    pub w: usize,
    pub i: usize,
    pub n: i64,
}

/// Status of one tropical Plucker position (w, i, j) with w s_i > w,
/// w s_j > w, i != j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PluckerStatus {
    /// The two-term relation holds with these values.
    Holds { lhs: i64, rhs: i64 },
    Fails { lhs: i64, rhs: i64 },
    /// a_ij = a_ji = 0: nothing to check.
    Vacuous,
    /// Doubly-laced position: no two-term relation applies.
    Unsupported,
}

#[derive(Debug, Clone)]
pub struct PluckerViolation {
    pub w: usize,
    pub i: usize,
    pub j: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Outcome of sweeping every defined Plucker position.
#[derive(Debug, Clone, Default)]
pub struct PluckerReport {
    pub holds: usize,
    pub vacuous: usize,
    pub unsupported: usize,
    pub violations: Vec<PluckerViolation>,
}

impl PluckerReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl BZDatum {
    pub fn new(sys: Arc<RootSystem>, m: Vec<i64>) -> Result<Self> {
        if m.len() != sys.gamma.len() {
            return Err(Error::Precondition(format!(
                "datum needs {} values, got {}",
                sys.gamma.len(),
                m.len()
            )));
        }
        Ok(Self { sys, m })
    }

    /// The point polytope {nu}: M_gamma = <nu, gamma>.
    pub fn point(sys: &Arc<RootSystem>, nu: &[i64]) -> Self {
        let m = sys
            .gamma
            .items
            .iter()
            .map(|cw| sys.datum.pair(nu, &cw.weight))
            .collect();
        Self { sys: Arc::clone(sys), m }
    }

    /// The Weyl-orbit hull conv(W . lam): M_{w Lambda_i} = <w_0 lam, Lambda_i>
    /// for every w.
    pub fn orbit_hull(sys: &Arc<RootSystem>, lam: &[i64]) -> Self {
        let bottom = sys.weyl.act_coweight(sys.weyl.w0(), lam);
        let m = sys.gamma.items.iter().map(|cw| bottom[cw.level]).collect();
        Self { sys: Arc::clone(sys), m }
    }

    pub fn values(&self) -> &[i64] {
        &self.m
    }

    pub fn value(&self, g: usize) -> i64 {
        self.m[g]
    }

    /// M at the chamber weight w Lambda_i.
    pub fn value_at(&self, w: usize, i: usize) -> i64 {
        self.m[self.sys.gamma.of(w, i)]
    }

    /// GGMS vertex mu_w = w . sum_i M_{w Lambda_i} alpha_i^vee.
    pub fn vertex(&self, w: usize) -> Coweight {
        let r = self.sys.rank();
        let coords: Vec<i64> = (0..r).map(|i| self.value_at(w, i)).collect();
        self.sys.weyl.act_coweight(w, &coords)
    }

    pub fn mu_e(&self) -> Coweight {
        self.vertex(self.sys.weyl.identity())
    }

    pub fn mu_w0(&self) -> Coweight {
        self.vertex(self.sys.weyl.w0())
    }

    /// mu_{w_0} - mu_e, the weight-space extent of the polytope (equals the
    /// crystal weight drop from the top).
    pub fn span(&self) -> Coweight {
        let top = self.mu_w0();
        let bot = self.mu_e();
        top.iter().zip(&bot).map(|(t, b)| t - b).collect()
    }

    /// Edge length n(w, i) >= 0 along the GGMS edge from mu_w to mu_{w s_i};
    /// invariant under replacing w by w s_i.
    pub fn edge_length(&self, w: usize, i: usize) -> i64 {
        let sys = &self.sys;
        let r = sys.rank();
        let wsi = sys.weyl.right_mul(w, i);
        let mut n = -self.value_at(w, i) - self.value_at(wsi, i);
        for j in 0..r {
            if j != i {
                n -= sys.datum.cartan().entry(j, i) * self.value_at(w, j);
            }
        }
        n
    }

    /// All edge-inequality failures, swept once per geometric edge
    /// (w s_i > w).
    pub fn check_edges(&self) -> Vec<EdgeViolation> {
        let sys = &self.sys;
        let mut out = Vec::new();
        for w in 0..sys.weyl.order() {
            for i in 0..sys.rank() {
                if sys.weyl.descent_right(w, i) {
                    continue;
                }
                let n = self.edge_length(w, i);
                if n < 0 {
                    out.push(EdgeViolation { w, i, n });
                }
            }
        }
        out
    }

    pub fn edges_ok(&self) -> bool {
        self.check_edges().is_empty()
    }

    /// Tropical Plucker status at a position (w, i, j) with both ascents.
    pub fn plucker_at(&self, w: usize, i: usize, j: usize) -> Result<PluckerStatus> {
        let sys = &self.sys;
        let weyl = &sys.weyl;
        if i == j || i >= sys.rank() || j >= sys.rank() {
            return Err(Error::Precondition("need two distinct letters".into()));
        }
        if weyl.descent_right(w, i) || weyl.descent_right(w, j) {
            return Err(Error::Precondition(
                "Plucker positions need w s_i > w and w s_j > w".into(),
            ));
        }
        let a = sys.datum.cartan();
        let (aij, aji) = (a.entry(i, j), a.entry(j, i));
        if aij == 0 {
            return Ok(PluckerStatus::Vacuous);
        }
        if aij * aji != 1 {
            return Ok(PluckerStatus::Unsupported);
        }
        let wsi = weyl.right_mul(w, i);
        let wsj = weyl.right_mul(w, j);
        let wsisj = weyl.right_mul(wsi, j);
        let wsjsi = weyl.right_mul(wsj, i);
        let lhs = self.value_at(wsi, i) + self.value_at(wsj, j);
        let rhs = std::cmp::min(
            self.value_at(w, i) + self.value_at(wsisj, j),
            self.value_at(wsjsi, i) + self.value_at(w, j),
        );
        if lhs == rhs {
            Ok(PluckerStatus::Holds { lhs, rhs })
        } else {
            Ok(PluckerStatus::Fails { lhs, rhs })
        }
    }

    /// Sweep all defined Plucker positions (i < j to avoid the symmetric
    /// duplicate).
    pub fn plucker_report(&self) -> PluckerReport {
        let sys = &self.sys;
        let mut report = PluckerReport::default();
        for w in 0..sys.weyl.order() {
            for i in 0..sys.rank() {
                if sys.weyl.descent_right(w, i) {
                    continue;
                }
                for j in (i + 1)..sys.rank() {
                    if sys.weyl.descent_right(w, j) {
                        continue;
                    }
                    match self.plucker_at(w, i, j).expect("position is defined") {
                        PluckerStatus::Holds { .. } => report.holds += 1,
                        PluckerStatus::Vacuous => report.vacuous += 1,
                        PluckerStatus::Unsupported => report.unsupported += 1,
                        PluckerStatus::Fails { lhs, rhs } => {
                            report.violations.push(PluckerViolation { w, i, j, lhs, rhs })
                        }
                    }
                }
            }
        }
        report
    }

    /// Lusztig datum along a reduced word of w_0: n_k is the edge length at
    /// the k-th step of the GGMS path.
    pub fn lusztig_datum(&self, word: &[usize]) -> Result<Vec<i64>> {
        let path = self.sys.weyl.w0_word_path(word)?;
        Ok(word
            .iter()
            .enumerate()
            .map(|(k, &i)| self.edge_length(path[k], i))
            .collect())
    }

    /// Translate the polytope by the coweight nu.
    pub fn translate(&self, nu: &[i64]) -> Self {
        let m = self
            .sys
            .gamma
            .items
            .iter()
            .zip(&self.m)
            .map(|(cw, v)| v + self.sys.datum.pair(nu, &cw.weight))
            .collect();
        Self { sys: Arc::clone(&self.sys), m }
    }

    /// The negated polytope -P: M'_gamma = M_{-gamma}. Vertices satisfy
    /// mu'_w = -mu_{w w_0}.
    pub fn negate(&self) -> Self {
        let m = (0..self.m.len()).map(|g| self.m[self.sys.gamma.negated(g)]).collect();
        Self { sys: Arc::clone(&self.sys), m }
    }

    /// Membership of a coweight in the polytope: <mu, gamma> >= M_gamma for
    /// every chamber weight.
    pub fn contains(&self, mu: &[i64]) -> bool {
        self.sys
            .gamma
            .items
            .iter()
            .zip(&self.m)
            .all(|(cw, &v)| self.sys.datum.pair(mu, &cw.weight) >= v)
    }

    /// Membership of a point given in classical coordinates, paired against
    /// the standard chamber-weight representatives (subset indicators in
    /// type A, signed indicators in type C). In type A this accepts any
    /// integer vector, not only sum-zero ones.
    pub fn contains_classical(&self, point: &[i64]) -> Result<bool> {
        for (cw, &v) in self.sys.gamma.items.iter().zip(&self.m) {
            let rep = self.sys.datum.weight_to_classical(&cw.weight)?;
            if point.len() != rep.len() {
                return Err(Error::Precondition(format!(
                    "point needs {} classical coordinates",
                    rep.len()
                )));
            }
            let pairing: i64 = point.iter().zip(&rep).map(|(p, r)| p * r).sum();
            if pairing < v {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Polytope containment: self contains `inner` iff every defining value
    /// of `inner` dominates the corresponding value of self.
    pub fn contains_polytope(&self, inner: &Self) -> bool {
        self.m.iter().zip(&inner.m).all(|(outer, inner)| inner >= outer)
    }

    /// Membership in the highest-weight crystal B(lam) for a datum whose top
    /// vertex is lam: checks M_{w_0 s_i Lambda_i} >= <w_0 lam, Lambda_i> for
    /// every i. Errors if mu_{w_0} != lam.
    pub fn in_crystal_lambda(&self, lam: &[i64]) -> Result<bool> {
        let sys = &self.sys;
        let top = self.mu_w0();
        if top != lam {
            return Err(Error::TopVertexMismatch(format!(
                "mu_w0 = {:?}, lambda = {:?}",
                top, lam
            )));
        }
        let bottom = sys.weyl.act_coweight(sys.weyl.w0(), lam);
        let w0 = sys.weyl.w0();
        for i in 0..sys.rank() {
            let w0si = sys.weyl.right_mul(w0, i);
            if self.value_at(w0si, i) < bottom[i] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Translate so that mu_{w_0} = 0 (the stable representative used for
    /// crystal-element identity).
    pub fn stable_normalize(&self) -> Self {
        let top = self.mu_w0();
        let neg: Coweight = top.iter().map(|x| -x).collect();
        self.translate(&neg)
    }
}

/// Translate a datum into some highest-weight crystal B(k . 2rho^vee),
/// starting from its stable representative. When `lower_letter` is given the
/// embedding also guarantees string capacity p_1 >= 1 for the word starting
/// with that letter, so the lowering operator stays inside B(lam). Returns
/// the embedded datum and its lambda.
pub fn embed_in_crystal(bz: &BZDatum, lower_letter: Option<usize>) -> (BZDatum, Coweight) {
    let sys = &bz.sys;
    let stable = bz.stable_normalize();
    let step = sys.datum.two_rho_vee().clone();
    let mut k: i64 = 1;
    loop {
        let lam: Coweight = step.iter().map(|x| x * k).collect();
        let cand = stable.translate(&lam);
        let ok_member = cand
            .in_crystal_lambda(&lam)
            .expect("translate keeps the top vertex at lambda");
        let ok_room = match lower_letter {
            None => true,
            Some(j) => {
                let sj = sys.weyl.right_mul(sys.weyl.identity(), j);
                cand.value_at(0, j) - cand.value_at(sj, j) >= 1
            }
        };
        if ok_member && ok_room {
            return (cand, lam);
        }
        k += 1;
        assert!(k < 1_000_000, "embedding translate failed to terminate");
    }
}

/// Rebuild a full BZ datum from one Lusztig datum (simply-laced types only):
/// seeds every chamber weight visible along the GGMS path of `word`, then
/// propagates across braid moves, where each length-3 move determines the
/// single unknown value through the tropical Plucker relation. Consistency
/// of overlapping assignments is checked throughout.
pub fn bz_from_lusztig(
    sys: &Arc<RootSystem>,
    word: &[usize],
    n: &[i64],
    mu_e: &[i64],
) -> Result<BZDatum> {
    bz_from_lusztig_impl(sys, word, n, mu_e, false)
}

/// As `bz_from_lusztig`, but visits the entire braid-move graph even after
/// all chamber weights are known, so every derivable overlap is
/// cross-checked. Meant for consistency audits in tests; exponentially many
/// words in higher rank.
pub fn bz_from_lusztig_exhaustive(
    sys: &Arc<RootSystem>,
    word: &[usize],
    n: &[i64],
    mu_e: &[i64],
) -> Result<BZDatum> {
    bz_from_lusztig_impl(sys, word, n, mu_e, true)
}

fn bz_from_lusztig_impl(
    sys: &Arc<RootSystem>,
    word: &[usize],
    n: &[i64],
    mu_e: &[i64],
    exhaustive: bool,
) -> Result<BZDatum> {
    if !sys.datum.is_simply_laced() {
        return Err(Error::Unsupported(
            "Lusztig-datum propagation needs a simply-laced type".into(),
        ));
    }
    sys.weyl.w0_word_path(word)?;
    if n.len() != word.len() {
        return Err(Error::Precondition(format!(
            "Lusztig datum needs {} entries, got {}",
            word.len(),
            n.len()
        )));
    }
    if n.iter().any(|&x| x < 0) {
        return Err(Error::Precondition("Lusztig data are nonnegative".into()));
    }
    if mu_e.len() != sys.rank() {
        return Err(Error::Precondition("mu_e has the wrong rank".into()));
    }

    let mut assigned: Vec<Option<i64>> = vec![None; sys.gamma.len()];
    let mut remaining = sys.gamma.len();
    let assign = |slot: &mut Vec<Option<i64>>, remaining: &mut usize, g: usize, v: i64| -> Result<()> {
        match slot[g] {
            None => {
                slot[g] = Some(v);
                *remaining -= 1;
                Ok(())
            }
            Some(old) if old == v => Ok(()),
            Some(old) => Err(Error::Inconsistent(format!(
                "chamber weight {} assigned both {} and {}",
                g, old, v
            ))),
        }
    };

    // Walk the GGMS path of `word` with the given edge lengths and read off
    // M_{w_k Lambda_l} = <mu_k, w_k Lambda_l> for every level l.
    let seed_word = |assigned: &mut Vec<Option<i64>>,
                         remaining: &mut usize,
                         word: &[usize],
                         n: &[i64]|
     -> Result<()> {
        let path = sys.weyl.w0_word_path(word)?;
        let mut mu = mu_e.to_vec();
        for (k, &w) in path.iter().enumerate() {
            if k > 0 {
                let i = word[k - 1];
                let prev = path[k - 1];
                let step = sys.weyl.act_coweight(prev, &sys.datum.simple_coroot(i));
                for (m, s) in mu.iter_mut().zip(&step) {
                    *m += n[k - 1] * s;
                }
            }
            // <mu_k, w_k Lambda_l> = (w_k^{-1} mu_k)[l].
            let pulled = sys.weyl.act_coweight(sys.weyl.inverse(w), &mu);
            for l in 0..sys.rank() {
                assign(assigned, remaining, sys.gamma.of(w, l), pulled[l])?;
            }
        }
        Ok(())
    };

    seed_word(&mut assigned, &mut remaining, word, n)?;

    // Braid BFS. Lusztig data transform alongside the words; a length-3
    // move (i j i) -> (j i j) with counts (n1, n2, n3) yields
    // (n2 + n3 - t, t, n1 + n2 - t) with t = min(n1, n3), and the flip
    // solves the Plucker relation for the one new chamber weight
    // w s_j Lambda_j.
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    visited.insert(word.to_vec());
    let mut queue = std::collections::VecDeque::new();
    queue.push_back((word.to_vec(), n.to_vec()));
    while let Some((cur_word, cur_n)) = queue.pop_front() {
        if !exhaustive && remaining == 0 {
            break;
        }
        let path = sys.weyl.w0_word_path(&cur_word).expect("queued words stay reduced");
        for mv in braid_moves(sys.datum.cartan(), &cur_word) {
            let next_word = apply_braid(&cur_word, mv);
            let known = visited.contains(&next_word);
            if known && !exhaustive {
                continue;
            }
            let mut next_n = cur_n.clone();
            match mv.d {
                2 => {
                    next_n.swap(mv.pos, mv.pos + 1);
                    // No new chamber weight: w s_j Lambda_j = w s_i s_j Lambda_j.
                }
                3 => {
                    let (n1, n2, n3) = (cur_n[mv.pos], cur_n[mv.pos + 1], cur_n[mv.pos + 2]);
                    let t = n1.min(n3);
                    next_n[mv.pos] = n2 + n3 - t;
                    next_n[mv.pos + 1] = t;
                    next_n[mv.pos + 2] = n1 + n2 - t;
                    // Solve the Plucker relation at (w, i, j) for
                    // M_{w s_j Lambda_j}; every other term is already known.
                    let w = path[mv.pos];
                    let i = cur_word[mv.pos];
                    let j = cur_word[mv.pos + 1];
                    let weyl = &sys.weyl;
                    let wsi = weyl.right_mul(w, i);
                    let wsj = weyl.right_mul(w, j);
                    let wsisj = weyl.right_mul(wsi, j);
                    let wsjsi = weyl.right_mul(wsj, i);
                    let get = |g: usize| -> i64 {
                        assigned[g].expect("path coverage invariant broken")
                    };
                    let rhs = std::cmp::min(
                        get(sys.gamma.of(w, i)) + get(sys.gamma.of(wsisj, j)),
                        get(sys.gamma.of(wsjsi, i)) + get(sys.gamma.of(w, j)),
                    );
                    let new_val = rhs - get(sys.gamma.of(wsi, i));
                    assign(&mut assigned, &mut remaining, sys.gamma.of(wsj, j), new_val)?;
                }
                _ => unreachable!("simply-laced words only have d = 2, 3 moves"),
            }
            if !known {
                visited.insert(next_word.clone());
                queue.push_back((next_word, next_n));
            }
        }
    }

    assert_eq!(remaining, 0, "braid component must cover all chamber weights");
    let m: Vec<i64> = assigned.into_iter().map(|v| v.expect("covered")).collect();
    BZDatum::new(Arc::clone(sys), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RootSystem;

    fn a2() -> Arc<RootSystem> {
        RootSystem::builtin("A2").unwrap()
    }

    /// The all-(-1) hexagon datum in A2.
    fn hexagon(sys: &Arc<RootSystem>) -> BZDatum {
        BZDatum::new(Arc::clone(sys), vec![-1; 6]).unwrap()
    }

    fn classical_vertex(sys: &Arc<RootSystem>, bz: &BZDatum, w: usize) -> Vec<i64> {
        sys.datum.coweight_to_classical(&bz.vertex(w)).unwrap()
    }

    #[test]
    fn hexagon_vertices() {
        let sys = a2();
        let bz = hexagon(&sys);
        // The all-(-1) datum is the hexagon with these six vertices.
        let weyl = &sys.weyl;
        let e = weyl.identity();
        let s1 = weyl.right_mul(e, 0);
        let s2 = weyl.right_mul(e, 1);
        let s1s2 = weyl.right_mul(s1, 1);
        let s2s1 = weyl.right_mul(s2, 0);
        let w0 = weyl.w0();
        assert_eq!(classical_vertex(&sys, &bz, e), vec![-1, 0, 1]);
        assert_eq!(classical_vertex(&sys, &bz, s1), vec![0, -1, 1]);
        assert_eq!(classical_vertex(&sys, &bz, s2), vec![-1, 1, 0]);
        assert_eq!(classical_vertex(&sys, &bz, s1s2), vec![1, -1, 0]);
        assert_eq!(classical_vertex(&sys, &bz, s2s1), vec![0, 1, -1]);
        assert_eq!(classical_vertex(&sys, &bz, w0), vec![1, 0, -1]);
    }

    #[test]
    fn hexagon_edge_lengths_and_lusztig() {
        let sys = a2();
        let bz = hexagon(&sys);
        assert!(bz.edges_ok());
        for w in 0..sys.weyl.order() {
            for i in 0..2 {
                assert_eq!(bz.edge_length(w, i), 1);
                // n(w, i) = n(w s_i, i).
                assert_eq!(bz.edge_length(sys.weyl.right_mul(w, i), i), bz.edge_length(w, i));
            }
        }
        assert_eq!(bz.lusztig_datum(&[0, 1, 0]).unwrap(), vec![1, 1, 1]);
        assert_eq!(bz.lusztig_datum(&[1, 0, 1]).unwrap(), vec![1, 1, 1]);
        let report = bz.plucker_report();
        assert!(report.ok());
        assert_eq!(report.unsupported, 0);
    }

    #[test]
    fn hexagon_membership() {
        let sys = a2();
        let bz = hexagon(&sys);
        // rho^vee = (1, 0, -1) classically; the hexagon is B(rho^vee)-shaped.
        let rho = sys.datum.coweight_from_classical(&[1, 0, -1]).unwrap();
        assert_eq!(bz.mu_w0(), rho);
        assert!(bz.in_crystal_lambda(&rho).unwrap());
        assert!(bz.contains(&sys.datum.coweight_from_classical(&[0, 0, 0]).unwrap()));
        assert!(bz.contains_classical(&[0, 0, 0]).unwrap());
        assert!(!bz.contains_classical(&[2, 0, -2]).unwrap());
        // Point polytopes sit inside B(lam) for dominant lam.
        let point = BZDatum::point(&sys, &rho);
        assert!(point.in_crystal_lambda(&rho).unwrap());
        assert!(point.edges_ok());
        assert!(point.plucker_report().ok());
        assert!(bz.contains_polytope(&point));
        assert!(!point.contains_polytope(&bz));
    }

    #[test]
    fn orbit_hull_datum() {
        let sys = a2();
        let rho = sys.datum.coweight_from_classical(&[1, 0, -1]).unwrap();
        let hull = BZDatum::orbit_hull(&sys, &rho);
        assert!(hull.edges_ok());
        assert!(hull.plucker_report().ok());
        assert_eq!(hull.mu_w0(), rho);
        assert!(hull.in_crystal_lambda(&rho).unwrap());
        // The hull contains the hexagon's own values? Same polytope here:
        // conv(W rho^vee) in A2 is exactly the all-(-1) hexagon.
        assert_eq!(hull, hexagon(&sys));
        // A1 sanity: conv(W alpha^vee) has M_{Lambda_1} = -1.
        let sys1 = RootSystem::builtin("A1").unwrap();
        let hull1 = BZDatum::orbit_hull(&sys1, &[1]);
        assert_eq!(hull1.values(), &[-1, -1]);
    }

    #[test]
    fn translate_and_negate() {
        let sys = a2();
        let bz = hexagon(&sys);
        let nu = sys.datum.coweight_from_classical(&[1, 0, -1]).unwrap();
        let t = bz.translate(&nu);
        let mut expect_top = bz.mu_w0();
        for (a, b) in expect_top.iter_mut().zip(&nu) {
            *a += b;
        }
        assert_eq!(t.mu_w0(), expect_top);
        assert_eq!(t.translate(&nu.iter().map(|x| -x).collect::<Vec<_>>()), bz);
        // The hexagon is centrally symmetric.
        assert_eq!(bz.negate(), bz);
        // Negation reverses Lusztig data along the eta-reversed word.
        let n = bz.lusztig_datum(&[0, 1, 0]).unwrap();
        let eta = &sys.gamma.eta;
        let reversed: Vec<usize> = [0usize, 1, 0].iter().rev().map(|&i| eta[i]).collect();
        assert_eq!(bz.negate().lusztig_datum(&reversed).unwrap(), {
            let mut r = n.clone();
            r.reverse();
            r
        });
        // Stable normalization puts the top at the origin.
        let stable = t.stable_normalize();
        assert_eq!(stable.mu_w0(), vec![0, 0]);
    }

    #[test]
    fn ggms_identities_on_hexagon() {
        let sys = a2();
        let bz = hexagon(&sys);
        // <mu_w, w Lambda_i> = M_{w Lambda_i} for all (w, i).
        for w in 0..sys.weyl.order() {
            let mu = bz.vertex(w);
            for i in 0..2 {
                let mut lam = vec![0i64; 2];
                lam[i] = 1;
                let wl = sys.weyl.act_weight(w, &lam);
                assert_eq!(sys.datum.pair(&mu, &wl), bz.value_at(w, i));
            }
            // mu_{w s_i} - mu_w = n(w, i) w alpha_i^vee.
            for i in 0..2 {
                let wsi = sys.weyl.right_mul(w, i);
                let diff: Vec<i64> =
                    bz.vertex(wsi).iter().zip(&bz.vertex(w)).map(|(a, b)| a - b).collect();
                let dir = sys.weyl.act_coweight(w, &sys.datum.simple_coroot(i));
                let n = bz.edge_length(w, i);
                let expect: Vec<i64> = dir.iter().map(|x| n * x).collect();
                assert_eq!(diff, expect);
            }
        }
    }

    #[test]
    fn lusztig_round_trip_small_a2() {
        let sys = a2();
        let word = vec![0usize, 1, 0];
        for n1 in 0..3i64 {
            for n2 in 0..3i64 {
                for n3 in 0..3i64 {
                    let n = vec![n1, n2, n3];
                    let mu_e = vec![-7i64, 5];
                    let bz = bz_from_lusztig_exhaustive(&sys, &word, &n, &mu_e).unwrap();
                    assert_eq!(bz.lusztig_datum(&word).unwrap(), n);
                    assert_eq!(bz.mu_e(), mu_e);
                    assert!(bz.edges_ok());
                    assert!(bz.plucker_report().ok());
                }
            }
        }
    }

    #[test]
    fn lusztig_rebuild_matches_hexagon() {
        let sys = a2();
        let bz = hexagon(&sys);
        let word = vec![0usize, 1, 0];
        let rebuilt =
            bz_from_lusztig(&sys, &word, &bz.lusztig_datum(&word).unwrap(), &bz.mu_e()).unwrap();
        assert_eq!(rebuilt, bz);
    }

    #[test]
    fn lusztig_rejects_bad_input() {
        let sys = a2();
        assert!(bz_from_lusztig(&sys, &[0, 1, 0], &[1, 1], &[0, 0]).is_err());
        assert!(bz_from_lusztig(&sys, &[0, 1, 0], &[1, -1, 1], &[0, 0]).is_err());
        assert!(bz_from_lusztig(&sys, &[0, 0, 1], &[1, 1, 1], &[0, 0]).is_err());
        let c2 = RootSystem::builtin("C2").unwrap();
        match bz_from_lusztig(&c2, &[0, 1, 0, 1], &[1, 1, 1, 1], &[0, 0]) {
            Err(Error::Unsupported(_)) => {}
            other => panic!("expected Unsupported, got {other:?}"),
        }
    }

    #[test]
    fn embed_terminates_and_is_member() {
        let sys = a2();
        let bz = hexagon(&sys);
        let (emb, lam) = embed_in_crystal(&bz, Some(0));
        assert_eq!(emb.mu_w0(), lam);
        assert!(emb.in_crystal_lambda(&lam).unwrap());
        let sj = sys.weyl.right_mul(0, 0);
        assert!(emb.value_at(0, 0) - emb.value_at(sj, 0) >= 1);
    }
}
