//! Sparse multivariate and dense binary-form polynomial algebra over ℚ(i).

mod binary;
mod parse;
mod roots;
pub(crate) mod upoly;

pub use binary::{univariate_gcd, BinaryForm};
pub use parse::parse_poly;
pub use roots::{isolate_squarefree, roots_certified, P1Root, RootBox};

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{ComplexBox, GaussianRational};
use crate::linalg::Mat;
use crate::{Error, Result};

/// Exponent vector ordered by graded lexicographic comparison, so term maps
/// iterate deterministically from small to large.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over ℚ(i); no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    pub vars: Vec<String>,
    pub terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_owned(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: GaussianRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn var(vars: &[&str], idx: usize) -> Self {
        let mut p = Self::zero(vars);
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(Monomial(e), GaussianRational::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: Vec<(Vec<u32>, GaussianRational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_value(&self) -> GaussianRational {
        self.terms
            .get(&Monomial(vec![0; self.nvars()]))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_vars(&self, o: &Self) {
        assert_eq!(self.vars, o.vars, "polynomials over different variable lists");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.assert_same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.assert_same_vars(o);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero_owned(self.vars.clone());
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero_owned(self.vars.clone());
        }
        let mut out = Self::zero_owned(self.vars.clone());
        for (m, k) in &self.terms {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.assert_same_vars(o);
        let mut out = Self::zero_owned(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &GaussianRational) -> Self {
        let mut out = Self::zero_owned(self.vars.clone());
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant_owned(self.vars.clone(), GaussianRational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            if e > 1 {
                base = base.mul(&base);
            }
            e >>= 1;
        }
        acc
    }

    fn constant_owned(vars: Vec<String>, c: GaussianRational) -> Self {
        let mut p = Self::zero_owned(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    pub fn eval_boxes(&self, boxes: &[ComplexBox]) -> ComplexBox {
        let terms: Vec<(Vec<u32>, GaussianRational)> =
            self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        crate::arith::box_eval(boxes, &terms)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero_owned(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut me = m.clone();
            me.0[var] -= 1;
            out.add_term(me, c * &GaussianRational::from_int(e as i64));
        }
        out
    }

    /// Substitute each variable by the given polynomial (all over one shared
    /// target variable list).
    pub fn substitute_map(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars(), "one image per variable required");
        let target_vars = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for im in images {
            assert_eq!(im.vars, target_vars, "images over different variable lists");
        }
        // memoized powers per variable
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![Self::constant_owned(target_vars.clone(), GaussianRational::one()), im.clone()])
            .collect();
        let mut out = Self::zero_owned(target_vars.clone());
        for (m, c) in &self.terms {
            let mut t = Self::constant_owned(target_vars.clone(), c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&images[v]);
                    powers[v].push(next);
                }
                t = t.mul(&powers[v][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Linear change of variables x -> M x (column-vector convention):
    /// result(x) = f(Mx), so variable i is replaced by sum_j M[i][j] x_j.
    pub fn substitute_linear(&self, m: &Mat) -> Result<Self> {
        if m.rows != self.nvars() || m.cols != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "substitution matrix is {}x{}, polynomial has {} variables",
                m.rows,
                m.cols,
                self.nvars()
            )));
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let images: Vec<MultiPoly> = (0..self.nvars())
            .map(|i| {
                let mut p = Self::zero(&vars);
                for j in 0..self.nvars() {
                    if !m[(i, j)].is_zero() {
                        let mut e = vec![0; p.vars.len()];
                        e[j] = 1;
                        p.add_term(Monomial(e), m[(i, j)].clone());
                    }
                }
                p
            })
            .collect();
        Ok(self.substitute_map(&images))
    }

    /// Degree in which the polynomial is homogeneous, if it is.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.total_degree();
        if it.all(|m| m.total_degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// For F homogeneous of degree d in all variables, returns F_k: the
    /// coefficient form of grading_var^(d-k), a polynomial of degree k in the
    /// remaining variables. Sum_k F_k * grading_var^(d-k) reassembles F.
    pub fn homogeneous_part(&self, grading_var: &str, k: u32) -> Result<MultiPoly> {
        let d = self
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidInput("polynomial is not homogeneous".into()))?;
        if k > d {
            return Err(Error::InvalidInput(format!("part index {k} exceeds degree {d}")));
        }
        let g = self
            .vars
            .iter()
            .position(|v| v == grading_var)
            .ok_or_else(|| Error::InvalidInput(format!("unknown grading variable '{grading_var}'")))?;
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != g)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = Self::zero_owned(rest);
        for (m, c) in &self.terms {
            if m.0[g] == d - k {
                let e: Vec<u32> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != g)
                    .map(|(_, &x)| x)
                    .collect();
                out.add_term(Monomial(e), c.clone());
            }
        }
        Ok(out)
    }

    /// Leading term w.r.t. the storage (graded lex) order.
    fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Division with remainder by a single divisor w.r.t. graded lex order:
    /// self = q*g + r with no term of r divisible by the leading term of g.
    pub fn divrem(&self, g: &Self) -> (Self, Self) {
        self.assert_same_vars(g);
        let (gm, gc) = g.leading().expect("division by zero polynomial");
        let gc_inv = gc.inv().unwrap();
        let mut q = Self::zero_owned(self.vars.clone());
        let mut r = Self::zero_owned(self.vars.clone());
        let mut work = self.clone();
        while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if gm.divides(&m) {
                let factor_m = m.div(gm);
                let factor_c = &c * &gc_inv;
                q.add_term(factor_m.clone(), factor_c.clone());
                let sub = g.mul_term(&factor_m, &factor_c);
                work = work.sub(&sub);
            } else {
                work.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        (q, r)
    }

    /// Split off the highest power of S = v0^2 + v1^2 + v2^2 over the
    /// polynomial's (exactly three) variables: returns (k, f_tilde) with
    /// self = S^k * f_tilde and S not dividing f_tilde.
    pub fn sphere_factor_split(&self) -> Result<(u32, MultiPoly)> {
        if self.is_zero() {
            return Err(Error::InvalidInput("cannot split sphere factor of zero".into()));
        }
        if self.nvars() != 3 {
            return Err(Error::DimensionMismatch(format!(
                "sphere factor split expects a ternary form, got {} variables",
                self.nvars()
            )));
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut sphere = Self::zero(&vars);
        for i in 0..3 {
            let mut e = vec![0u32; 3];
            e[i] = 2;
            sphere.add_term(Monomial(e), GaussianRational::one());
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(&sphere);
            if r.is_zero() {
                k += 1;
                cur = q;
            } else {
                return Ok((k, cur));
            }
        }
    }

    /// Restriction to a subset of variables: every exponent outside `keep`
    /// must be zero.
    pub fn project_vars(&self, keep: &[&str]) -> Result<MultiPoly> {
        let idx: Vec<usize> = keep
            .iter()
            .map(|k| {
                self.vars
                    .iter()
                    .position(|v| v == k)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown variable '{k}'")))
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(keep);
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 && !idx.contains(&i) {
                    return Err(Error::InvalidInput(format!(
                        "variable '{}' present in polynomial",
                        self.vars[i]
                    )));
                }
            }
            out.add_term(Monomial(idx.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        Ok(out)
    }

    /// Same polynomial over a larger variable list (new variables unused).
    pub fn extend_vars(&self, vars: &[&str]) -> Result<MultiPoly> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::InvalidInput(format!("variable '{v}' missing from target list")))
            })
            .collect::<Result<_>>()?;
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[idx[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Collect the polynomial as a map from powers of one variable to
    /// polynomials in the remaining variables.
    pub fn coefficients_of(&self, var: &str) -> Result<BTreeMap<u32, MultiPoly>> {
        let g = self
            .vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable '{var}'")))?;
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != g)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != g)
                .map(|(_, &x)| x)
                .collect();
            out.entry(m.0[g])
                .or_insert_with(|| Self::zero_owned(rest.clone()))
                .add_term(Monomial(e), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Gaussian-rational content: the coefficient of the leading term; the
    /// polynomial divided by it has leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultiPoly {
    /// Parser-compatible text form, largest term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            let coeff_str = {
                use num_traits::Zero;
                let s = c.to_string();
                if (!c.is_real() && !c.re.is_zero()) || (s.contains('/') && !mono.is_empty()) {
                    format!("({s})")
                } else {
                    s
                }
            };
            let body = if mono.is_empty() {
                coeff_str
            } else if c.is_one() {
                mono.join("*")
            } else if (-c).is_one() {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", coeff_str, mono.join("*"))
            };
            if first {
                write!(f, "{}", body)?;
                first = false;
            } else if let Some(stripped) = body.strip_prefix('-') {
                write!(f, " - {}", stripped)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

/// Rectangular matrix of polynomials sharing one variable list.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    pub rows: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let Some(first) = rows.first().and_then(|r| r.first()) else {
            return Err(Error::InvalidInput("empty polynomial matrix".into()));
        };
        let vars = first.vars.clone();
        let width = rows[0].len();
        for r in &rows {
            if r.len() != width {
                return Err(Error::DimensionMismatch("ragged polynomial matrix".into()));
            }
            for p in r {
                if p.vars != vars {
                    return Err(Error::DimensionMismatch(
                        "polynomial matrix entries over different variables".into(),
                    ));
                }
            }
        }
        Ok(PolyMatrix { rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// Exact determinant by Laplace expansion with memoization over column
    /// subsets (fine for the small matrices arising here).
    pub fn det(&self) -> Result<MultiPoly> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let vars = self.rows[0][0].vars.clone();
        // minors[mask] = det of rows 0..popcount(mask) on column set mask
        let mut minors: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        minors.insert(0, MultiPoly::constant_owned(vars.clone(), GaussianRational::one()));
        for r in 0..n {
            let mut next: BTreeMap<u64, MultiPoly> = BTreeMap::new();
            for (mask, minor) in &minors {
                let mut sign_flips = 0u32;
                for c in 0..n {
                    let bit = 1u64 << c;
                    if mask & bit != 0 {
                        sign_flips += 1;
                        continue;
                    }
                    let entry = &self.rows[r][c];
                    if entry.is_zero() {
                        continue;
                    }
                    let mut contrib = minor.mul(entry);
                    // parity of new inversions when row r takes column c
                    if (sign_flips + r as u32) % 2 == 1 {
                        contrib = contrib.neg();
                    }
                    let newmask = mask | bit;
                    match next.entry(newmask) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(contrib);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            let s = e.get().add(&contrib);
                            *e.get_mut() = s;
                        }
                    }
                }
            }
            minors = next;
        }
        let full = (1u64 << n) - 1;
        Ok(minors.remove(&full).unwrap_or_else(|| MultiPoly::zero_owned(vars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn arithmetic_and_substitution() {
        let f = parse_poly("x0^2 + 2*x0*x1 + x1^2", &["x0", "x1"]).unwrap();
        let g = parse_poly("(x0 + x1)^2", &["x0", "x1"]).unwrap();
        assert_eq!(f, g);
        // swap variables
        let m = Mat::from_rows(vec![
            vec![gr(0), gr(1)],
            vec![gr(1), gr(0)],
        ]);
        assert_eq!(f.substitute_linear(&m).unwrap(), f);
        let x0 = parse_poly("x0", &["x0", "x1"]).unwrap();
        assert_eq!(x0.substitute_linear(&m).unwrap(), parse_poly("x1", &["x0", "x1"]).unwrap());
    }

    #[test]
    fn substitution_functorial() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let vars = ["x0", "x1", "x2"];
        for _ in 0..20 {
            let f = MultiPoly::from_terms(
                &vars,
                (0..6)
                    .map(|_| {
                        let e = vec![
                            rng.gen_range(0..3u32),
                            rng.gen_range(0..3u32),
                            rng.gen_range(0..2u32),
                        ];
                        (e, gr(rng.gen_range(-5..6)))
                    })
                    .collect(),
            );
            let m = Mat::from_fn(3, 3, |_, _| gr(rng.gen_range(-3..4)));
            let n = Mat::from_fn(3, 3, |_, _| gr(rng.gen_range(-3..4)));
            let lhs = f.substitute_linear(&m.mul(&n)).unwrap();
            let rhs = f.substitute_linear(&m).unwrap().substitute_linear(&n).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn homogeneous_parts_reassemble() {
        let f = parse_poly(
            "x0^3 + 2*x0^2*x1 + 3*x0*x1*x2 + x1^3 + x2^3",
            &["x0", "x1", "x2"],
        )
        .unwrap();
        assert_eq!(f.homogeneous_degree(), Some(3));
        let mut acc = MultiPoly::zero(&["x0", "x1", "x2"]);
        for k in 0..=3u32 {
            let part = f.homogeneous_part("x0", k).unwrap();
            let lifted = part.extend_vars(&["x0", "x1", "x2"]).unwrap();
            let x0pow = MultiPoly::var(&["x0", "x1", "x2"], 0).pow(3 - k);
            acc = acc.add(&lifted.mul(&x0pow));
        }
        assert_eq!(acc, f);
        // specific parts: F_k multiplies x0^(d-k)
        let p1 = f.homogeneous_part("x0", 1).unwrap();
        assert_eq!(p1, parse_poly("2*x1", &["x1", "x2"]).unwrap());
        let p2 = f.homogeneous_part("x0", 2).unwrap();
        assert_eq!(p2, parse_poly("3*x1*x2", &["x1", "x2"]).unwrap());
        let f2 = parse_poly("x0^3", &["x0", "x1", "x2"]).unwrap();
        assert_eq!(
            f2.homogeneous_part("x0", 0).unwrap(),
            parse_poly("1", &["x1", "x2"]).unwrap()
        );
        let f3 = parse_poly("x0*x1*x2", &["x0", "x1", "x2"]).unwrap();
        assert_eq!(
            f3.homogeneous_part("x0", 2).unwrap(),
            parse_poly("x1*x2", &["x1", "x2"]).unwrap()
        );
    }

    #[test]
    fn poly_matrix_det_small() {
        let vars = ["s", "t"];
        let s = MultiPoly::var(&vars, 0);
        let t = MultiPoly::var(&vars, 1);
        let one = MultiPoly::constant(&vars, gr(1));
        let zero = MultiPoly::zero(&vars);
        let id = PolyMatrix::new(vec![
            vec![one.clone(), zero.clone()],
            vec![zero.clone(), one.clone()],
        ])
        .unwrap();
        assert_eq!(id.det().unwrap(), one);
        let m = PolyMatrix::new(vec![
            vec![s.clone(), t.clone()],
            vec![t.clone(), s.clone()],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), parse_poly("s^2 - t^2", &vars).unwrap());
    }

    #[test]
    fn sphere_split() {
        let vars = ["x1", "x2", "x3"];
        let s = parse_poly("x1^2 + x2^2 + x3^2", &vars).unwrap();
        let (k, rest) = s.pow(2).sphere_factor_split().unwrap();
        assert_eq!(k, 2);
        assert!(rest.is_constant());
        assert_eq!(rest.constant_value(), gr(1));

        let f = parse_poly("(x1^2+x2^2)^3 - 4*x1^2*x2^2*x3^2", &vars).unwrap();
        let (k, rest) = f.sphere_factor_split().unwrap();
        assert_eq!(k, 0);
        assert_eq!(rest, f);
        // remainder of f by S is nonzero (independent check of S not dividing f)
        let (_, r) = f.divrem(&s);
        assert!(!r.is_zero());

        let x1 = parse_poly("x1", &vars).unwrap();
        let (k, rest) = s.mul(&x1).sphere_factor_split().unwrap();
        assert_eq!(k, 1);
        assert_eq!(rest, x1);
    }

    #[test]
    fn display_roundtrip() {
        let cases = [
            "x0^2 - x1^2",
            "3*i*x0 + 1/2",
            "(1/2+3*i)*x0*x1 - 7",
            "x0^3 + 2*x0^2*x1 + 3*x0*x1*x2 + x1^3 + x2^3",
        ];
        for c in cases {
            let p = parse_poly(c, &["x0", "x1", "x2"]).unwrap();
            let q = parse_poly(&p.to_string(), &["x0", "x1", "x2"]).unwrap();
            assert_eq!(p, q, "display of {c} must reparse to the same polynomial");
        }
    }

    #[test]
    fn coefficient_scaling() {
        let f = parse_poly("2*x0 + 4*x1", &["x0", "x1"]).unwrap();
        let m = f.monic();
        assert_eq!(m, parse_poly("x0 + 2*x1", &["x0", "x1"]).unwrap());
        let _ = rat(1, 2);
    }
}
