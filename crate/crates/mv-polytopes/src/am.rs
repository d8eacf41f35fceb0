//! The candidate lowering operator defined directly on polytope data, and
//! tooling to compare it against the true crystal operator f_j.
//!
//! With c = M_{Lambda_j} - M_{s_j Lambda_j} - 1, the candidate replaces
//!
//!   M_gamma  by  min(M_gamma, M_{s_j gamma} + c <alpha_j^vee, gamma>)
//!
//! on the chamber weights with <alpha_j^vee, gamma> > 0, and keeps the rest.
//! In type A this agrees with f_j on the whole crystal; beyond type A it can
//! fail, and `am` reports exactly how (tropical relations broken, strict
//! containment in the true image).

use std::sync::Arc;

use crate::bz::{BZDatum, EdgeViolation, PluckerReport};
use crate::crystal::{binf_graph, f_polytope};
use crate::error::{Error, Result};
use crate::root_datum::Classical;
use crate::{Coweight, RootSystem};

/// The shift constant c = M_{Lambda_j} - M_{s_j Lambda_j} - 1.
pub fn am_shift(bz: &BZDatum, j: usize) -> i64 {
    let sys = &bz.sys;
    let e = sys.weyl.identity();
    let s_j = sys.weyl.right_mul(e, j);
    bz.value(sys.gamma.of(e, j)) - bz.value(sys.gamma.of(s_j, j)) - 1
}

/// The reflection r(mu) = s_j mu + c alpha_j^vee sending kept vertices to
/// candidate vertices of the lowered polytope.
pub fn am_reflect(sys: &RootSystem, j: usize, c: i64, mu: &[i64]) -> Coweight {
    let mut out = sys.datum.reflect_coweight(j, mu);
    out[j] += c;
    out
}

/// Apply the candidate operator. Total on any datum of the right rank; the
/// result is not guaranteed to satisfy the tropical relations.
pub fn am_output(bz: &BZDatum, j: usize) -> Result<BZDatum> {
    let sys = &bz.sys;
    if j >= sys.rank() {
        return Err(Error::Precondition(format!("letter {} out of range", j + 1)));
    }
    let c = am_shift(bz, j);
    let upper = sys.gamma.upper_mask(&sys.weyl, j);
    let mut m = bz.values().to_vec();
    for (g, cw) in sys.gamma.items.iter().enumerate() {
        if upper[g] {
            continue;
        }
        let sg = sys
            .gamma
            .lookup(&sys.datum.reflect_weight(j, &cw.weight))
            .expect("reflection permutes the chamber weights");
        let cand = bz.value(sg) + c * cw.weight[j];
        if cand < m[g] {
            m[g] = cand;
        }
    }
    BZDatum::new(Arc::clone(sys), m)
}

/// The same operator computed through the subset labels of a type A chart:
/// for a column set S with j in S and j+1 not in S, the reflected label is
/// S with j replaced by j+1 and the pairing coefficient is 1.
pub fn am_sln(bz: &BZDatum, j: usize) -> Result<BZDatum> {
    let sys = &bz.sys;
    match sys.datum.classical() {
        Some(Classical::A(_)) => {}
        _ => {
            return Err(Error::Unsupported(
                "subset description needs a type A chart".into(),
            ))
        }
    }
    if j >= sys.rank() {
        return Err(Error::Precondition(format!("letter {} out of range", j + 1)));
    }
    let c = am_shift(bz, j);
    let mut m = bz.values().to_vec();
    for (g, cw) in sys.gamma.items.iter().enumerate() {
        let ind = sys.datum.weight_to_classical(&cw.weight)?;
        if ind[j] == 1 && ind[j + 1] == 0 {
            let mut swapped = ind.clone();
            swapped.swap(j, j + 1);
            let wt = sys.datum.weight_from_classical(&swapped)?;
            let sg = sys.gamma.lookup(&wt).expect("swapped label is a chamber weight");
            let cand = bz.value(sg) + c;
            if cand < m[g] {
                m[g] = cand;
            }
        }
    }
    BZDatum::new(Arc::clone(sys), m)
}

/// Height statistic of a subset label in type A, for the letter j:
/// members above position j+1 count +1, members below position j count -1.
/// Every peel step of `j_close_check` lowers it by exactly one there.
pub fn h_sln(indicator: &[i64], j: usize) -> i64 {
    let above = indicator.iter().enumerate().filter(|&(k, &v)| k > j + 1 && v == 1).count();
    let below = indicator.iter().enumerate().filter(|&(k, &v)| k < j && v == 1).count();
    above as i64 - below as i64
}

/// How the candidate output relates to the structure the true operator is
/// known to have. All five hold whenever the candidate equals f_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmConditions {
    /// Vertices mu_w with s_j w < w are unchanged.
    pub kept: bool,
    /// The bottom vertex moved down by exactly alpha_j^vee.
    pub shifted: bool,
    /// The remaining input vertices still lie in the output.
    pub retained: bool,
    /// r(mu_w) lies in the output for every kept vertex with
    /// <mu_w, alpha_j> >= c.
    pub reflected: bool,
    /// On the lower chamber weights the output values are realized by the
    /// mandated points alone (kept, shifted, retained, reflected).
    pub minimal: bool,
    /// The eligible reflected points, as (w, r(mu_w)).
    pub reflected_points: Vec<(usize, Coweight)>,
}

/// Full comparison of the candidate operator against f_j at one datum.
#[derive(Debug, Clone)]
pub struct AmReport {
    pub j: usize,
    pub c: i64,
    pub output: BZDatum,
    pub edge_violations: Vec<EdgeViolation>,
    pub plucker: PluckerReport,
    pub f_output: BZDatum,
    pub equals_f: bool,
    pub contained_in_f: bool,
    pub conditions: Option<AmConditions>,
}

impl AmReport {
    pub fn output_is_valid(&self) -> bool {
        self.edge_violations.is_empty() && self.plucker.ok()
    }
}

fn am_conditions(bz: &BZDatum, j: usize, c: i64, out: &BZDatum) -> AmConditions {
    let sys = &bz.sys;
    let weyl = &sys.weyl;
    let mut kept = true;
    let mut retained = true;
    let mut reflected = true;
    let mut reflected_points = Vec::new();
    let mut mandated: Vec<Coweight> = Vec::new();
    for w in 0..weyl.order() {
        let mu = bz.vertex(w);
        if weyl.descent_left(w, j) {
            if out.vertex(w) != mu {
                kept = false;
            }
            if sys.datum.pair_simple_root(&mu, j) >= c {
                let r = am_reflect(sys, j, c, &mu);
                if !out.contains(&r) {
                    reflected = false;
                }
                mandated.push(r.clone());
                reflected_points.push((w, r));
            }
        } else if !out.contains(&mu) {
            retained = false;
        }
        mandated.push(mu);
    }
    let low = {
        let mut mu = bz.mu_e();
        mu[j] -= 1;
        mu
    };
    let shifted = out.mu_e() == low;
    mandated.push(low);
    let upper = sys.gamma.upper_mask(weyl, j);
    let mut minimal = true;
    for (g, cw) in sys.gamma.items.iter().enumerate() {
        if upper[g] {
            continue;
        }
        let best = mandated
            .iter()
            .map(|p| sys.datum.pair(p, &cw.weight))
            .min()
            .expect("mandated set is nonempty");
        if best != out.value(g) {
            minimal = false;
        }
    }
    AmConditions { kept, shifted, retained, reflected, minimal, reflected_points }
}

/// Run the candidate operator and compare with f_j. The input must be a
/// valid datum (f_j requires it); the output is examined as-is.
pub fn am(bz: &BZDatum, j: usize) -> Result<AmReport> {
    let output = am_output(bz, j)?;
    let c = am_shift(bz, j);
    let f_output = f_polytope(bz, j)?;
    let edge_violations = output.check_edges();
    let plucker = output.plucker_report();
    let equals_f = output == f_output;
    let contained_in_f = f_output.contains_polytope(&output);
    let conditions = if edge_violations.is_empty() {
        Some(am_conditions(bz, j, c, &output))
    } else {
        None
    };
    Ok(AmReport {
        j,
        c,
        output,
        edge_violations,
        plucker,
        f_output,
        equals_f,
        contained_in_f,
        conditions,
    })
}

/// One step of the peeling argument: the lower chamber weight `gamma` is
/// pinned by the tropical relation at (v; i, k), whose only other lower
/// unknown `delta` was pinned earlier.
#[derive(Debug, Clone, Copy)]
pub struct PeelStep {
    pub gamma: usize,
    pub v: usize,
    pub i: usize,
    pub k: usize,
    pub delta: usize,
}

/// Outcome of the peeling argument for one letter: if `residue` is empty,
/// every lower chamber weight is reachable and the candidate operator is
/// forced to agree with f_j on this letter.
#[derive(Debug, Clone)]
pub struct JCloseCertificate {
    pub j: usize,
    pub peeled: Vec<PeelStep>,
    pub residue: Vec<usize>,
}

impl JCloseCertificate {
    pub fn closed(&self) -> bool {
        self.residue.is_empty()
    }
}

/// Try to peel the lower chamber weights for the letter j, starting from
/// Lambda_j (whose output value is pinned directly by the shift). A weight
/// gamma = v s_i Lambda_i is peeled when some simply-laced pair (i, k) at a
/// double ascent v has s_j v = v s_k and delta = v Lambda_k already peeled:
/// the relation there determines gamma from delta and the unchanged upper
/// values. Sweeps run in canonical order, so the certificate is
/// deterministic.
pub fn j_close_check(sys: &RootSystem, j: usize) -> JCloseCertificate {
    let weyl = &sys.weyl;
    let gamma = &sys.gamma;
    let cartan = sys.datum.cartan();
    let upper = gamma.upper_mask(weyl, j);
    let n = gamma.len();
    let mut done = vec![false; n];
    done[gamma.of(weyl.identity(), j)] = true;
    let mut peeled = Vec::new();
    loop {
        let mut progressed = false;
        for g in 0..n {
            if upper[g] || done[g] {
                continue;
            }
            'search: for v in 0..weyl.order() {
                for i in 0..sys.rank() {
                    if weyl.descent_right(v, i) || gamma.of(weyl.right_mul(v, i), i) != g {
                        continue;
                    }
                    for k in 0..sys.rank() {
                        if weyl.descent_right(v, k)
                            || cartan.entry(i, k) != -1
                            || cartan.entry(k, i) != -1
                            || weyl.left_mul(v, j) != weyl.right_mul(v, k)
                        {
                            continue;
                        }
                        let delta = gamma.of(v, k);
                        if !done[delta] {
                            continue;
                        }
                        peeled.push(PeelStep { gamma: g, v, i, k, delta });
                        done[g] = true;
                        progressed = true;
                        break 'search;
                    }
                }
            }
        }
        if !progressed {
            break;
        }
    }
    let residue = (0..n).filter(|&g| !upper[g] && !done[g]).collect();
    JCloseCertificate { j, peeled, residue }
}

/// A node where the candidate operator disagreed with f_j during a scan.
#[derive(Debug, Clone)]
pub struct AmMismatch {
    pub node: usize,
    pub j: usize,
    pub weight: Coweight,
    pub lusztig: Vec<i64>,
    pub contained_in_f: bool,
    pub output_valid: bool,
}

#[derive(Debug, Clone)]
pub struct AmScanReport {
    pub nodes: usize,
    pub checked: usize,
    pub mismatches: Vec<AmMismatch>,
}

/// Compare the candidate operator with f_j over every element within
/// `depth` lowering steps of the top of B(infinity).
pub fn am_scan(
    sys: &Arc<RootSystem>,
    depth: usize,
    js: &[usize],
    cap: usize,
) -> Result<AmScanReport> {
    let graph = binf_graph(sys, depth, None, cap)?;
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for (idx, node) in graph.nodes.iter().enumerate() {
        for &j in js {
            let report = am(&node.bz, j)?;
            checked += 1;
            if !report.equals_f {
                mismatches.push(AmMismatch {
                    node: idx,
                    j,
                    weight: node.weight.clone(),
                    lusztig: node.lusztig.clone(),
                    contained_in_f: report.contained_in_f,
                    output_valid: report.output_is_valid(),
                });
            }
        }
    }
    Ok(AmScanReport { nodes: graph.nodes.len(), checked, mismatches })
}

/// The one-parameter family of valid data (x >= 2) on which the candidate
/// operator for the first letter breaks: the output violates a tropical
/// relation and is a strict subset of the true f_1 image. Needs the rank 3
/// chart with the long third root.
pub fn counterexample_input(sys: &Arc<RootSystem>, x: i64) -> Result<BZDatum> {
    match sys.datum.classical() {
        Some(Classical::C(3)) => {}
        _ => {
            return Err(Error::Unsupported(
                "the counterexample lives in the rank 3 symplectic chart".into(),
            ))
        }
    }
    if x < 2 {
        return Err(Error::Precondition("the family needs x >= 2".into()));
    }
    let mut m: Vec<Option<i64>> = vec![None; sys.gamma.len()];
    let set = |names: &[&str], value: i64, m: &mut Vec<Option<i64>>| -> Result<()> {
        for name in names {
            let wt = sys.datum.weight_from_pretty(name)?;
            let g = sys.gamma.lookup(&wt).expect("pretty names label chamber weights");
            assert!(m[g].is_none(), "{name} assigned twice");
            m[g] = Some(value);
        }
        Ok(())
    };
    set(
        &["1", "12", "13", "123", "2", "23", "3", "-123", "-12", "-13", "-1"],
        0,
        &mut m,
    )?;
    set(&["1-3", "12-3", "2-3", "-12-3", "-1-3", "-3"], -x, &mut m)?;
    set(&["1-2", "1-23", "-23", "-1-23", "-1-2", "-2"], -2, &mut m)?;
    set(&["1-2-3", "-2-3", "-1-2-3"], -x - 2, &mut m)?;
    let m: Vec<i64> = m
        .into_iter()
        .map(|v| v.expect("the 26 names cover the chamber weights"))
        .collect();
    BZDatum::new(Arc::clone(sys), m)
}

/// Closed form of the candidate output of `counterexample_input(x)` at the
/// first letter, on the lower chamber weights (the upper ones keep their
/// input values). Pretty names paired with values.
pub fn counterexample_lower_values(x: i64) -> [(&'static str, i64); 9] {
    [
        ("1", -1),
        ("13", -1),
        ("1-23", -2),
        ("-23", -2),
        ("-2", -2),
        ("1-2", -2),
        ("1-3", -x - 1),
        ("1-2-3", -x - 2),
        ("-2-3", -x - 2),
    ]
}
