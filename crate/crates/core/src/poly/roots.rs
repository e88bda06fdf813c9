//! Certified complex root isolation for binary forms: exact squarefree
//! decomposition first, Aberth-Ehrlich approximation in floating point,
//! then interval-Newton certification with exact rational interval
//! arithmetic, refined until all boxes are pairwise disjoint.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::binary::BinaryForm;
use super::upoly::{self, UPoly};
use crate::arith::{ComplexBox, GaussianRational, Rational};
use crate::{Error, Result};

/// Root of a binary form on ℙ¹: a box in the t/s chart, or the point [0:1].
#[derive(Clone, Debug)]
pub enum P1Root {
    Finite(ComplexBox),
    Infinity,
}

pub type RootBox = (P1Root, usize);

/// An isolating box together with the squarefree polynomial that certifies
/// it, so it can be squeezed further on demand. Exact roots carry no
/// refiner; their boxes are single points.
struct Isolated {
    bx: ComplexBox,
    refiner: Option<(UPoly, UPoly)>,
    mult: usize,
}

/// Isolating boxes with multiplicities for all roots of a nonzero binary
/// form. Multiplicities come from exact squarefree decomposition; boxes are
/// pairwise disjoint and certified to contain exactly one root each. The
/// root [0:1] is detected exactly from the coefficients. Finite roots are
/// sorted by midpoint (re, im); [0:1] comes last.
pub fn roots_certified(f: &BinaryForm, precision: u32) -> Result<Vec<RootBox>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("zero form has no root set".into()));
    }
    let (t_mult, s_mult, core) = f.core_upoly();
    let mut finite: Vec<Isolated> = Vec::new();
    if t_mult > 0 {
        finite.push(Isolated {
            bx: ComplexBox::exact(&GaussianRational::zero(), precision),
            refiner: None,
            mult: t_mult,
        });
    }
    if core.len() > 1 {
        for (mult, g) in upoly::squarefree_decomposition(&core) {
            for iso in isolate_squarefree_inner(&g, precision)? {
                finite.push(Isolated { bx: iso.bx, refiner: iso.refiner, mult });
            }
        }
    }
    separate_boxes(&mut finite)?;
    finite.sort_by(|a, b| {
        let (am, bm) = (a.bx.mid(), b.bx.mid());
        am.re.cmp(&bm.re).then_with(|| am.im.cmp(&bm.im))
    });
    let mut out: Vec<RootBox> =
        finite.into_iter().map(|iso| (P1Root::Finite(iso.bx), iso.mult)).collect();
    if s_mult > 0 {
        out.push((P1Root::Infinity, s_mult));
    }
    let total: usize = out.iter().map(|(_, m)| m).sum();
    debug_assert_eq!(total, f.degree());
    Ok(out)
}

/// Certified boxes for the roots of a squarefree univariate polynomial over
/// ℚ(i). Rational roots of linear polynomials come out exact.
pub fn isolate_squarefree(g: &UPoly, precision: u32) -> Result<Vec<ComplexBox>> {
    let mut isos = isolate_squarefree_inner(g, precision)?;
    separate_boxes(&mut isos)?;
    Ok(isos.into_iter().map(|i| i.bx).collect())
}

fn isolate_squarefree_inner(g: &UPoly, precision: u32) -> Result<Vec<Isolated>> {
    let d = match upoly::deg(g) {
        None | Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    if d == 1 {
        let root = -(&g[0] / &g[1]);
        return Ok(vec![Isolated {
            bx: ComplexBox::exact(&root, precision),
            refiner: None,
            mult: 1,
        }]);
    }
    let monic = upoly::monic(g);
    let deriv = upoly::derivative(&monic);
    // deterministic restart offsets for the initial-guess circle
    for offset in [0.376f64, 1.111, 2.503] {
        let approx = aberth(&monic, offset);
        if approx.len() != d {
            continue;
        }
        let mut out = Vec::with_capacity(d);
        let mut ok = true;
        for (re, im) in &approx {
            match certify_and_refine(&monic, &deriv, *re, *im, precision) {
                Some(b) => out.push(Isolated {
                    bx: b,
                    refiner: Some((monic.clone(), deriv.clone())),
                    mult: 1,
                }),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && separate_boxes(&mut out).is_ok() {
            return Ok(out);
        }
    }
    Err(Error::PrecisionExhausted(format!(
        "could not certify all {d} roots of a squarefree factor"
    )))
}

/// Refine until all boxes are pairwise disjoint. Each box holds a distinct
/// root, so enough refinement always separates them.
fn separate_boxes(entries: &mut [Isolated]) -> Result<()> {
    for round in 0..24u32 {
        let mut overlap = None;
        'outer: for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if entries[i].bx.overlaps(&entries[j].bx) {
                    overlap = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = overlap else {
            return Ok(());
        };
        let mut progressed = false;
        for k in [i, j] {
            let target = entries[k].bx.precision + 48 * (round + 1);
            if let Some((f, df)) = entries[k].refiner.clone() {
                if let Some(nb) = newton_refine(&f, &df, entries[k].bx.clone(), target) {
                    entries[k].bx = nb;
                    progressed = true;
                }
            }
        }
        if !progressed {
            break;
        }
    }
    Err(Error::PrecisionExhausted("root boxes failed to separate".into()))
}

fn certify_and_refine(
    f: &UPoly,
    df: &UPoly,
    re: f64,
    im: f64,
    precision: u32,
) -> Option<ComplexBox> {
    let mut center = (re, im);
    for polish_round in 0..4 {
        for radius_bits in [40u32, 46, 34, 52, 28] {
            let x = ComplexBox::from_f64_center(center.0, center.1, radius_bits, precision);
            if let Some(certified) = newton_certify(f, df, x) {
                return newton_refine(f, df, certified, precision);
            }
        }
        // polish with one exact Newton step, rounded to dyadics
        center = exact_newton_step(f, df, center, 192 + 64 * polish_round)?;
    }
    None
}

/// One interval Newton step; Some(contracted) iff N(X) lies strictly inside
/// X, which certifies a unique root in the intersection.
fn newton_certify(f: &UPoly, df: &UPoly, x: ComplexBox) -> Option<ComplexBox> {
    let mid = x.mid();
    let fm = upoly::eval(f, &mid);
    let dfx = upoly::eval_box(df, &x);
    let quot = ComplexBox::exact(&fm, x.precision).div(&dfx)?;
    let n = ComplexBox::exact(&mid, x.precision).sub(&quot);
    if n.strictly_inside(&x) {
        n.intersect(&x)
    } else {
        None
    }
}

/// Contract a certified box until its width is at most 2^-target_bits.
fn newton_refine(f: &UPoly, df: &UPoly, mut x: ComplexBox, target_bits: u32) -> Option<ComplexBox> {
    let target = Rational::new(BigInt::one(), BigInt::one() << target_bits);
    let mut stalls = 0u32;
    while x.width() > target {
        let mid = x.mid();
        let fm = upoly::eval(f, &mid);
        let dfx = upoly::eval_box(df, &x);
        let quot = ComplexBox::exact(&fm, x.precision).div(&dfx)?;
        let n = ComplexBox::exact(&mid, x.precision)
            .sub(&quot)
            .round_out(target_bits + 32);
        let next = n.intersect(&x)?;
        if next.width() >= x.width() {
            stalls += 1;
            if stalls > 8 {
                return None;
            }
        } else {
            stalls = 0;
        }
        x = next;
    }
    x.precision = target_bits;
    Some(x)
}

fn exact_newton_step(f: &UPoly, df: &UPoly, z: (f64, f64), bits: u32) -> Option<(f64, f64)> {
    let zr = BigRational::from_float(z.0)?;
    let zi = BigRational::from_float(z.1)?;
    let zg = GaussianRational::new(zr, zi);
    let fv = upoly::eval(f, &zg);
    let dv = upoly::eval(df, &zg);
    if dv.is_zero() {
        return None;
    }
    let step = &fv / &dv;
    let next = &zg - &step;
    let rounded = GaussianRational::new(
        crate::arith::dyadic_floor(&next.re, bits),
        crate::arith::dyadic_floor(&next.im, bits),
    );
    Some(rounded.to_f64_pair())
}

/// Aberth-Ehrlich simultaneous iteration in f64. Deterministic given the
/// angle offset. Returns n approximations (possibly poor; certification is
/// the arbiter).
fn aberth(monic: &UPoly, offset: f64) -> Vec<(f64, f64)> {
    let n = monic.len() - 1;
    let coeffs: Vec<(f64, f64)> = monic.iter().map(|c| c.to_f64_pair()).collect();
    if coeffs.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
        return Vec::new();
    }
    // Cauchy bound
    let lead = cabs(coeffs[n]);
    let mut radius: f64 = 0.0;
    for c in &coeffs[..n] {
        radius = radius.max(cabs(*c) / lead);
    }
    let radius = 1.0 + radius;
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + offset;
            (0.7 * radius * ang.cos(), 0.7 * radius * ang.sin())
        })
        .collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        let prev = z.clone();
        for k in 0..n {
            let (fv, dv) = horner_with_derivative(&coeffs, prev[k]);
            if cabs(fv) == 0.0 {
                continue;
            }
            let w = if cabs(dv) > 0.0 { cdiv(fv, dv) } else { (1e-3, 1e-3) };
            let mut s = (0.0, 0.0);
            for (j, zj) in prev.iter().enumerate() {
                if j != k {
                    let diff = csub(prev[k], *zj);
                    if cabs(diff) > 1e-300 {
                        s = cadd(s, cdiv((1.0, 0.0), diff));
                    }
                }
            }
            let denom = csub((1.0, 0.0), cmul(w, s));
            let corr = if cabs(denom) > 1e-300 { cdiv(w, denom) } else { w };
            z[k] = csub(prev[k], corr);
            let rel = cabs(corr) / (1.0 + cabs(z[k]));
            max_step = max_step.max(rel);
        }
        if max_step < 1e-14 {
            break;
        }
    }
    z
}

fn cabs(a: (f64, f64)) -> f64 {
    a.0.hypot(a.1)
}

fn cadd(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 + b.0, a.1 + b.1)
}

fn csub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

fn horner_with_derivative(coeffs: &[(f64, f64)], z: (f64, f64)) -> ((f64, f64), (f64, f64)) {
    let mut p = (0.0, 0.0);
    let mut dp = (0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = cadd(cmul(dp, z), p);
        p = cadd(cmul(p, z), *c);
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn bf(text: &str) -> BinaryForm {
        BinaryForm::from_multipoly(&parse_poly(text, &["s", "t"]).unwrap()).unwrap()
    }

    #[test]
    fn coordinate_roots() {
        let roots = roots_certified(&bf("s*t"), 128).unwrap();
        assert_eq!(roots.len(), 2);
        match &roots[0] {
            (P1Root::Finite(b), 1) => assert!(b.is_point() && b.contains_zero()),
            other => panic!("expected exact [1:0] root, got {other:?}"),
        }
        assert!(matches!(roots[1], (P1Root::Infinity, 1)));
    }

    #[test]
    fn triple_root() {
        let roots = roots_certified(&bf("(s - t)^3"), 128).unwrap();
        assert_eq!(roots.len(), 1);
        match &roots[0] {
            (P1Root::Finite(b), 3) => assert!(b.contains(&GaussianRational::one())),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quartic_simple_roots_disjoint_at_128_bits() {
        // stall form of the quartic curve example
        let f = bf("3*s^4 + 20*s^3*t - 72*s^2*t^2 + 64*s*t^3 - 16*t^4");
        assert!(f.is_squarefree());
        let roots = roots_certified(&f, 128).unwrap();
        assert_eq!(roots.len(), 4);
        for (r, m) in &roots {
            assert_eq!(*m, 1);
            let P1Root::Finite(b) = r else { panic!("no infinite root expected") };
            assert!(b.width() <= Rational::new(BigInt::one(), BigInt::one() << 128));
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let (P1Root::Finite(a), _) = &roots[i] else { unreachable!() };
                let (P1Root::Finite(b), _) = &roots[j] else { unreachable!() };
                assert!(!a.overlaps(b));
            }
        }
        // refined by extra bits, boxes still certify roots: sign-certified
        // via exact interval evaluation containing zero
        let (_, _, core) = f.core_upoly();
        for (r, _) in &roots {
            let P1Root::Finite(b) = r else { continue };
            let v = upoly::eval_box(&core, b);
            assert!(v.contains_zero());
        }
    }

    #[test]
    fn gaussian_rational_roots_boxed() {
        // points [1:v] have chart value v: roots at 2+4i, 1/10 - 1/5 i, 3
        let vals = vec![
            GaussianRational::from_pair((2, 1), (4, 1)),
            GaussianRational::from_pair((1, 10), (-1, 5)),
            GaussianRational::from_int(3),
        ];
        let pts: Vec<_> = vals.iter().map(|v| (GaussianRational::one(), v.clone())).collect();
        let f = BinaryForm::from_roots(&pts);
        let roots = roots_certified(&f, 96).unwrap();
        assert_eq!(roots.len(), 3);
        for v in &vals {
            let hit = roots.iter().any(|(r, _)| match r {
                P1Root::Finite(b) => b.contains(v),
                P1Root::Infinity => false,
            });
            assert!(hit, "expected isolated box around {v}");
        }
    }

    #[test]
    fn multiplicities_sum_to_degree() {
        let f = bf("s^2*(s - t)^3*(s^2 + t^2)*t");
        let roots = roots_certified(&f, 64).unwrap();
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        assert_eq!(total, f.degree());
    }
}
