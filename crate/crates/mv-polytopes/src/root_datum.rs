//! Cartan matrices, root data, and the two coordinate systems used
//! throughout the crate.
//!
//! Weights are stored in the fundamental-weight basis: a weight `lam` is the
//! integer vector with `lam[i] = <alpha_i^vee, lam>`. Coweights are stored in
//! the simple-coroot basis. With these conventions the canonical pairing of a
//! coweight `mu` against a weight `lam` is the plain dot product, and both
//! reflection actions stay integral:
//!
//! * `(s_i lam)[k] = lam[k] - lam[i] * a[k][i]`
//! * `(s_i mu)[k] = mu[k] - delta_{ki} * <mu, alpha_i>`, with
//!   `<mu, alpha_i> = sum_k mu[k] * a[k][i]`.
//!
//! Built-in types carry an optional classical coordinate chart (ambient Z^n)
//! used for pretty chamber-weight names and for containment tests phrased in
//! classical coordinates.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type Weight = Vec<i64>;
pub type Coweight = Vec<i64>;

/// Cap on the reflection closure used by the finite-type check.
pub const ROOT_CLOSURE_CAP: usize = 10_000;

/// An integer Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>`, validated to
/// be of finite type with no triple bonds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self> {
        let r = a.len();
        if r == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if a.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for i in 0..r {
            if a[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry a[{}][{}] = {} (must be 2)",
                    i + 1,
                    i + 1,
                    a[i][i]
                )));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry a[{}][{}] = {} (must be <= 0)",
                        i + 1,
                        j + 1,
                        a[i][j]
                    )));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for i in 0..r {
            for j in (i + 1)..r {
                let p = a[i][j] * a[j][i];
                if p == 3 {
                    return Err(Error::Unsupported(format!(
                        "triple bond between nodes {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
                if p > 3 {
                    return Err(Error::NotFiniteType(format!(
                        "bond product {} between nodes {} and {}",
                        p,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { a })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `<alpha_i^vee, alpha_j>`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn is_simply_laced(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| i == j || self.a[i][j] * self.a[j][i] <= 1))
    }

    /// Order of s_i s_j in the Weyl group (2, 3 or 4 here; 6 is rejected at
    /// construction).
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        match self.a[i][j] * self.a[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => unreachable!("triple bonds rejected at construction"),
        }
    }
}

/// Classical coordinate chart attached to a built-in type.
///
/// * `A(n)`: coweights are sum-zero vectors in Z^n, weights are Z^n modulo
///   the all-ones vector (canonical representative: minimum entry 0).
/// * `C(n)`: coweights and weights are both identified with Z^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classical {
    A(usize),
    C(usize),
}

impl Classical {
    /// Dimension of the ambient classical coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            Classical::A(n) | Classical::C(n) => n,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Classical::A(n) => n - 1,
            Classical::C(n) => n,
        }
    }

    /// The Cartan matrix this chart is valid for.
    pub fn expected_cartan(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            if i + 1 < r {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        if let Classical::C(_) = self {
            // Long root at the end: <alpha_{r-1}^vee, alpha_r> = -2.
            a[r - 2][r - 1] = -2;
        }
        a
    }
}

/// A root datum: a finite-type Cartan matrix together with its root and
/// coroot systems and an optional classical chart.
#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan: CartanMatrix,
    /// Positive roots in the simple-root basis.
    positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in the simple-coroot basis.
    positive_coroots: Vec<Coweight>,
    /// Sum of the positive coroots (twice rho^vee), in coroot coordinates.
    two_rho_vee: Coweight,
    classical: Option<Classical>,
}

impl RootDatum {
    pub fn new(cartan: CartanMatrix, classical: Option<Classical>) -> Result<Self> {
        if let Some(c) = classical {
            if c.rank() != cartan.rank() || c.expected_cartan() != cartan.a {
                return Err(Error::InvalidCartan(
                    "Cartan matrix does not match the requested classical chart".into(),
                ));
            }
            if let Classical::A(n) = c {
                if !(2..=6).contains(&n) {
                    return Err(Error::Unsupported(format!("A chart needs 2 <= n <= 6, got {n}")));
                }
            }
            if let Classical::C(n) = c {
                if !(2..=3).contains(&n) {
                    return Err(Error::Unsupported(format!("C chart needs n in {{2, 3}}, got {n}")));
                }
            }
        }
        let r = cartan.rank();
        // Close the simple roots under all simple reflections, in the
        // simple-root basis, where s_i subtracts (row i . k) from slot i.
        let root_refl = |k: &[i64], i: usize| -> Vec<i64> {
            let c: i64 = (0..r).map(|j| cartan.a[i][j] * k[j]).sum();
            let mut out = k.to_vec();
            out[i] -= c;
            out
        };
        let positive_roots = close_under(r, root_refl)?;
        // Coroots: s_i subtracts (column i . m) from slot i.
        let coroot_refl = |m: &[i64], i: usize| -> Vec<i64> {
            let c: i64 = (0..r).map(|k| m[k] * cartan.a[k][i]).sum();
            let mut out = m.to_vec();
            out[i] -= c;
            out
        };
        let positive_coroots = close_under(r, coroot_refl)?;
        assert_eq!(
            positive_roots.len(),
            positive_coroots.len(),
            "root and coroot systems must have equal size"
        );
        let mut two_rho_vee = vec![0i64; r];
        for cv in &positive_coroots {
            for k in 0..r {
                two_rho_vee[k] += cv[k];
            }
        }
        Ok(Self {
            cartan,
            positive_roots,
            positive_coroots,
            two_rho_vee,
            classical,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn classical(&self) -> Option<Classical> {
        self.classical
    }

    pub fn is_simply_laced(&self) -> bool {
        self.cartan.is_simply_laced()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Positive roots in the fundamental-weight basis.
    pub fn positive_roots_weights(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .map(|k| {
                (0..self.rank())
                    .map(|row| (0..self.rank()).map(|j| k[j] * self.cartan.a[row][j]).sum())
                    .collect()
            })
            .collect()
    }

    /// Positive coroots in the simple-coroot basis.
    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    /// Sum of all positive coroots (twice the dual Weyl vector).
    pub fn two_rho_vee(&self) -> &Coweight {
        &self.two_rho_vee
    }

    /// Canonical pairing of a coweight against a weight.
    pub fn pair(&self, mu: &[i64], lam: &[i64]) -> i64 {
        debug_assert_eq!(mu.len(), lam.len());
        mu.iter().zip(lam).map(|(m, c)| m * c).sum()
    }

    /// `alpha_i` in the fundamental-weight basis (column i of the Cartan
    /// matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        (0..self.rank()).map(|k| self.cartan.a[k][i]).collect()
    }

    /// `alpha_i^vee` in the simple-coroot basis.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }

    /// `<mu, alpha_i>` for a coweight `mu`.
    pub fn pair_simple_root(&self, mu: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|k| mu[k] * self.cartan.a[k][i]).sum()
    }

    /// `s_i` acting on a weight.
    pub fn reflect_weight(&self, i: usize, lam: &[i64]) -> Weight {
        (0..self.rank()).map(|k| lam[k] - lam[i] * self.cartan.a[k][i]).collect()
    }

    /// `s_i` acting on a coweight.
    pub fn reflect_coweight(&self, i: usize, mu: &[i64]) -> Coweight {
        let mut out = mu.to_vec();
        out[i] -= self.pair_simple_root(mu, i);
        out
    }

    pub fn is_dominant_coweight(&self, mu: &[i64]) -> bool {
        (0..self.rank()).all(|i| self.pair_simple_root(mu, i) >= 0)
    }

    fn chart(&self) -> Result<Classical> {
        self.classical
            .ok_or_else(|| Error::Precondition("no classical chart attached to this datum".into()))
    }

    /// Classical coordinates of a weight. For type A the representative with
    /// minimum entry 0 is returned; chamber weights come out as subset
    /// indicator vectors.
    pub fn weight_to_classical(&self, lam: &[i64]) -> Result<Vec<i64>> {
        let chart = self.chart()?;
        let n = chart.ambient_dim();
        let r = self.rank();
        let mut v = vec![0i64; n];
        match chart {
            Classical::A(_) => {
                // v[k] = lam[k] + v[k+1], v[n-1] = 0, then shift min to 0.
                for k in (0..r).rev() {
                    v[k] = lam[k] + v[k + 1];
                }
                let min = *v.iter().min().expect("nonempty");
                for x in v.iter_mut() {
                    *x -= min;
                }
            }
            Classical::C(_) => {
                v[n - 1] = lam[n - 1];
                for k in (0..n - 1).rev() {
                    v[k] = lam[k] + v[k + 1];
                }
            }
        }
        Ok(v)
    }

    pub fn weight_from_classical(&self, v: &[i64]) -> Result<Weight> {
        let chart = self.chart()?;
        let n = chart.ambient_dim();
        if v.len() != n {
            return Err(Error::Parse(format!(
                "classical weight needs {} coordinates, got {}",
                n,
                v.len()
            )));
        }
        match chart {
            Classical::A(_) => Ok((0..n - 1).map(|k| v[k] - v[k + 1]).collect()),
            Classical::C(_) => {
                let mut c: Weight = (0..n - 1).map(|k| v[k] - v[k + 1]).collect();
                c.push(v[n - 1]);
                Ok(c)
            }
        }
    }

    /// Classical coordinates of a coweight. Type A lands in the sum-zero
    /// sublattice of Z^n.
    pub fn coweight_to_classical(&self, mu: &[i64]) -> Result<Vec<i64>> {
        let chart = self.chart()?;
        let n = chart.ambient_dim();
        let r = self.rank();
        let mut v = vec![0i64; n];
        match chart {
            Classical::A(_) => {
                v[0] = mu[0];
                for k in 1..r {
                    v[k] = mu[k] - mu[k - 1];
                }
                v[n - 1] = -mu[r - 1];
            }
            Classical::C(_) => {
                v[0] = mu[0];
                for k in 1..n {
                    v[k] = mu[k] - mu[k - 1];
                }
            }
        }
        Ok(v)
    }

    pub fn coweight_from_classical(&self, v: &[i64]) -> Result<Coweight> {
        let chart = self.chart()?;
        let n = chart.ambient_dim();
        if v.len() != n {
            return Err(Error::Parse(format!(
                "classical coweight needs {} coordinates, got {}",
                n,
                v.len()
            )));
        }
        match chart {
            Classical::A(_) => {
                if v.iter().sum::<i64>() != 0 {
                    return Err(Error::Parse(
                        "type A classical coweights must have coordinate sum 0".into(),
                    ));
                }
                Ok((0..n - 1).map(|k| v[..=k].iter().sum()).collect())
            }
            Classical::C(_) => Ok((0..n).map(|k| v[..=k].iter().sum()).collect()),
        }
    }

    /// Pretty name of a chamber-weight-shaped weight: "13" for the subset
    /// {1, 3} in type A, signed variants like "1-2" (e_1 - e_2) in type C.
    /// Returns None when the weight is not of that shape.
    pub fn pretty_weight(&self, lam: &[i64]) -> Option<String> {
        let chart = self.classical?;
        let v = self.weight_to_classical(lam).ok()?;
        let n = chart.ambient_dim();
        match chart {
            Classical::A(_) => {
                if !v.iter().all(|&x| x == 0 || x == 1) {
                    return None;
                }
                let count = v.iter().filter(|&&x| x == 1).count();
                if count == 0 || count >= n {
                    return None;
                }
                let mut s = String::new();
                for (k, &x) in v.iter().enumerate() {
                    if x == 1 {
                        s.push_str(&(k + 1).to_string());
                    }
                }
                Some(s)
            }
            Classical::C(_) => {
                if !v.iter().all(|&x| (-1..=1).contains(&x)) {
                    return None;
                }
                if v.iter().all(|&x| x == 0) {
                    return None;
                }
                let mut s = String::new();
                for (k, &x) in v.iter().enumerate() {
                    if x == 1 {
                        s.push_str(&(k + 1).to_string());
                    } else if x == -1 {
                        s.push('-');
                        s.push_str(&(k + 1).to_string());
                    }
                }
                Some(s)
            }
        }
    }

    /// Parse a pretty chamber-weight name back into a weight.
    pub fn weight_from_pretty(&self, s: &str) -> Result<Weight> {
        let chart = self.chart()?;
        let n = chart.ambient_dim();
        let mut v = vec![0i64; n];
        let mut last_pos: Option<usize> = None;
        let mut chars = s.chars().peekable();
        if s.is_empty() {
            return Err(Error::Parse("empty chamber-weight name".into()));
        }
        while let Some(ch) = chars.next() {
            let (sign, digit) = if ch == '-' {
                if matches!(chart, Classical::A(_)) {
                    return Err(Error::Parse(format!("'-' not allowed in type A name {s:?}")));
                }
                match chars.next() {
                    Some(d) => (-1i64, d),
                    None => return Err(Error::Parse(format!("dangling '-' in {s:?}"))),
                }
            } else {
                (1i64, ch)
            };
            let pos = digit
                .to_digit(10)
                .filter(|&d| d >= 1 && d as usize <= n)
                .ok_or_else(|| Error::Parse(format!("bad position {digit:?} in {s:?}")))?
                as usize;
            if let Some(p) = last_pos {
                if pos <= p {
                    return Err(Error::Parse(format!(
                        "positions must be strictly increasing in {s:?}"
                    )));
                }
            }
            last_pos = Some(pos);
            v[pos - 1] = sign;
        }
        if matches!(chart, Classical::A(_)) {
            let count = v.iter().filter(|&&x| x == 1).count();
            if count == n {
                return Err(Error::Parse(format!("{s:?} is the full set, not a proper subset")));
            }
        }
        self.weight_from_classical(&v)
    }
}

/// Close the standard basis under `refl` and return the positive half.
fn close_under(r: usize, refl: impl Fn(&[i64], usize) -> Vec<i64>) -> Result<Vec<Vec<i64>>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(x) = queue.pop() {
        for i in 0..r {
            let y = refl(&x, i);
            if seen.insert(y.clone()) {
                if seen.len() > ROOT_CLOSURE_CAP {
                    return Err(Error::NotFiniteType(format!(
                        "reflection closure exceeded {ROOT_CLOSURE_CAP} vectors"
                    )));
                }
                queue.push(y);
            }
        }
    }
    let positive: Vec<Vec<i64>> = seen
        .iter()
        .filter(|k| k.iter().all(|&x| x >= 0))
        .cloned()
        .collect();
    assert_eq!(
        positive.len() * 2,
        seen.len(),
        "finite root system must split into positive and negative halves"
    );
    Ok(positive)
}

/// Cartan matrix of a built-in type name ("A1".."A5", "C2", "C3"), plus its
/// classical chart.
pub fn builtin_cartan(name: &str) -> Result<(CartanMatrix, Classical)> {
    let lower = name.to_ascii_lowercase();
    let chart = match lower.as_str() {
        "a1" => Classical::A(2),
        "a2" => Classical::A(3),
        "a3" => Classical::A(4),
        "a4" => Classical::A(5),
        "a5" => Classical::A(6),
        "c2" => Classical::C(2),
        "c3" => Classical::C(3),
        _ => {
            return Err(Error::Parse(format!(
                "unknown type {name:?} (supported: A1..A5, C2, C3)"
            )))
        }
    };
    Ok((CartanMatrix::new(chart.expected_cartan())?, chart))
}
