//! Dense binary forms: homogeneous polynomials in (s, t) over ℚ(i), stored
//! as the coefficient vector c0..cd of sum_j c_j s^(d-j) t^j.

use super::upoly::{self, UPoly};
use super::{Monomial, MultiPoly};
use crate::arith::GaussianRational;
use crate::linalg::Mat;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<GaussianRational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![GaussianRational::zero(); degree + 1] }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, j: usize) -> &GaussianRational {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Product of the linear forms q_k s - p_k t, vanishing exactly at the
    /// points [p_k : q_k].
    pub fn from_roots(points: &[(GaussianRational, GaussianRational)]) -> Self {
        let mut acc = BinaryForm::new(vec![GaussianRational::one()]);
        for (p, q) in points {
            let lin = BinaryForm::new(vec![q.clone(), -p]);
            acc = acc.mul(&lin);
        }
        acc
    }

    pub fn from_multipoly(p: &MultiPoly) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "binary form needs 2 variables, got {}",
                p.nvars()
            )));
        }
        if p.is_zero() {
            return Ok(BinaryForm::zero(0));
        }
        let d = p
            .homogeneous_degree()
            .ok_or_else(|| Error::InvalidInput("polynomial is not homogeneous".into()))? as usize;
        let mut coeffs = vec![GaussianRational::zero(); d + 1];
        for (m, c) in p.iter_terms() {
            coeffs[m.0[1] as usize] = c.clone();
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn to_multipoly(&self, svar: &str, tvar: &str) -> MultiPoly {
        let vars = [svar, tvar];
        let d = self.degree() as u32;
        let mut p = MultiPoly::zero(&vars);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Monomial(vec![d - j as u32, j as u32]), c.clone());
            }
        }
        p
    }

    pub fn eval(&self, s: &GaussianRational, t: &GaussianRational) -> GaussianRational {
        let d = self.degree();
        let mut acc = GaussianRational::zero();
        let mut spow = vec![GaussianRational::one()];
        let mut tpow = vec![GaussianRational::one()];
        for k in 1..=d {
            spow.push(&spow[k - 1] * s);
            tpow.push(&tpow[k - 1] * t);
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += &(&(c * &spow[d - j]) * &tpow[j]);
            }
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "degree mismatch in binary form addition");
        BinaryForm::new(
            self.coeffs.iter().zip(o.coeffs.iter()).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "degree mismatch in binary form subtraction");
        BinaryForm::new(
            self.coeffs.iter().zip(o.coeffs.iter()).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![GaussianRational::zero(); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + &(a * b);
                }
            }
        }
        BinaryForm::new(out)
    }

    pub fn derivative_s(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        let mut out = vec![GaussianRational::zero(); d];
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = (d - j) as i64;
            if e > 0 && !c.is_zero() {
                out[j] = c * &GaussianRational::from_int(e);
            }
        }
        BinaryForm::new(out)
    }

    pub fn derivative_t(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(0);
        }
        let mut out = vec![GaussianRational::zero(); d];
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 && !c.is_zero() {
                out[j - 1] = c * &GaussianRational::from_int(j as i64);
            }
        }
        BinaryForm::new(out)
    }

    /// Composition with a 2x2 matrix in the column convention:
    /// result(x) = self(Mx), i.e. s -> m00 s + m01 t, t -> m10 s + m11 t.
    pub fn compose(&self, m: &Mat) -> Self {
        assert_eq!((m.rows, m.cols), (2, 2));
        let d = self.degree();
        let l0 = BinaryForm::new(vec![m[(0, 0)].clone(), m[(0, 1)].clone()]);
        let l1 = BinaryForm::new(vec![m[(1, 0)].clone(), m[(1, 1)].clone()]);
        let mut p0 = vec![BinaryForm::new(vec![GaussianRational::one()])];
        let mut p1 = vec![BinaryForm::new(vec![GaussianRational::one()])];
        for k in 1..=d {
            p0.push(p0[k - 1].mul(&l0));
            p1.push(p1[k - 1].mul(&l1));
        }
        let mut acc = BinaryForm::zero(d);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = p0[d - j].mul(&p1[j]).scale(c);
            acc = acc.add(&term);
        }
        acc
    }

    /// Scale so the first nonzero coefficient (highest s-power) is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// o == c * self for nonzero scalar c.
    pub fn proportionality(&self, o: &Self) -> Option<GaussianRational> {
        if self.degree() != o.degree() {
            return None;
        }
        let mut ratio: Option<GaussianRational> = None;
        for (a, b) in self.coeffs.iter().zip(o.coeffs.iter()) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let r = b / a;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(prev) if *prev == r => {}
                        _ => return None,
                    }
                }
            }
        }
        ratio
    }

    /// Multiplicity of the root [1:0] (power of t dividing the form).
    pub fn mult_at_one_zero(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len())
    }

    /// Multiplicity of the root [0:1] (power of s dividing the form).
    pub fn mult_at_zero_one(&self) -> usize {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(jmax) => self.degree() - jmax,
            None => self.coeffs.len(),
        }
    }

    /// Strip both coordinate roots: returns (t-mult, s-mult, core) where the
    /// core, as a univariate polynomial in u = t/s, has nonzero constant and
    /// leading coefficients and carries the remaining roots.
    pub fn core_upoly(&self) -> (usize, usize, UPoly) {
        let jmin = self.mult_at_one_zero();
        if jmin == self.coeffs.len() {
            return (0, 0, Vec::new());
        }
        let jmax = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let core: UPoly = self.coeffs[jmin..=jmax].to_vec();
        (jmin, self.degree() - jmax, core)
    }

    fn from_core(t_mult: usize, s_mult: usize, core: &UPoly) -> Self {
        let m = core.len().saturating_sub(1);
        let d = t_mult + s_mult + m;
        let mut coeffs = vec![GaussianRational::zero(); d + 1];
        for (k, c) in core.iter().enumerate() {
            coeffs[t_mult + k] = c.clone();
        }
        BinaryForm { coeffs }
    }

    /// Exact gcd of two binary forms, normalized to leading coefficient 1.
    pub fn gcd(&self, o: &Self) -> Self {
        assert!(!self.is_zero() || !o.is_zero(), "gcd of two zero forms");
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let (t1, s1, c1) = self.core_upoly();
        let (t2, s2, c2) = o.core_upoly();
        let g = upoly::gcd(&c1, &c2);
        BinaryForm::from_core(t1.min(t2), s1.min(s2), &g).normalized()
    }

    /// Exact squarefree part (same roots, all multiplicities one).
    pub fn squarefree_part(&self) -> Self {
        let (t_mult, s_mult, core) = self.core_upoly();
        let sf = if core.len() <= 1 { core } else { upoly::squarefree_part(&core) };
        BinaryForm::from_core(t_mult.min(1), s_mult.min(1), &sf).normalized()
    }

    pub fn is_squarefree(&self) -> bool {
        let (t, s, core) = self.core_upoly();
        if t > 1 || s > 1 {
            return false;
        }
        if core.len() <= 1 {
            return true;
        }
        upoly::deg(&upoly::gcd(&core, &upoly::derivative(&core))) == Some(0)
    }
}

impl std::fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_multipoly("s", "t"))
    }
}

/// Exact gcd, leading coefficient 1 (the spec-level operation name).
pub fn univariate_gcd(f: &BinaryForm, g: &BinaryForm) -> BinaryForm {
    f.gcd(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn bf(text: &str) -> BinaryForm {
        BinaryForm::from_multipoly(&parse_poly(text, &["s", "t"]).unwrap()).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(bf("s^2 - t^2").gcd(&bf("s - t")), bf("s - t"));
        // coprime forms
        assert_eq!(bf("s^2 + t^2").gcd(&bf("s - 3*t")).degree(), 0);
        // common factor recovered up to unit
        let h = bf("2*s^2 - 3*s*t + t^2");
        let f = bf("s + t").mul(&h);
        let g = bf("s - 5*t").mul(&h);
        assert!(h.proportionality(&f.gcd(&g)).is_some());
    }

    #[test]
    fn coordinate_root_multiplicities() {
        let f = bf("s^3*t^2 - s^2*t^3");
        assert_eq!(f.mult_at_one_zero(), 2);
        assert_eq!(f.mult_at_zero_one(), 2);
        let sf = f.squarefree_part();
        assert_eq!(sf.degree(), 3); // roots [1:0], [0:1], [1:1]
        assert!(sf.is_squarefree());
    }

    #[test]
    fn compose_against_multipoly_substitution() {
        use crate::arith::rat;
        let f = bf("s^4 - 2*s*t^3 + 7*t^4");
        let m = Mat::from_rows(vec![
            vec![GaussianRational::from_int(2), GaussianRational::new(rat(-1, 1), rat(1, 1))],
            vec![GaussianRational::from_int(1), GaussianRational::from_int(3)],
        ]);
        let via_form = f.compose(&m);
        let via_poly = f
            .to_multipoly("s", "t")
            .substitute_linear(&m)
            .unwrap();
        assert_eq!(via_form.to_multipoly("s", "t"), via_poly);
    }

    #[test]
    fn from_roots_vanishes() {
        let pts = vec![
            (GaussianRational::from_int(1), GaussianRational::from_int(0)),
            (GaussianRational::from_int(0), GaussianRational::from_int(1)),
            (GaussianRational::from_int(2), GaussianRational::i()),
        ];
        let f = BinaryForm::from_roots(&pts);
        assert_eq!(f.degree(), 3);
        for (p, q) in &pts {
            assert!(f.eval(p, q).is_zero());
        }
    }
}
