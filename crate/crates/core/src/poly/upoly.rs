//! Minimal univariate polynomial helpers over ℚ(i): dense ascending
//! coefficient vectors, Euclidean arithmetic, Yun squarefree decomposition.

use crate::arith::{ComplexBox, GaussianRational};

pub type UPoly = Vec<GaussianRational>;

pub fn trim(p: &mut UPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub fn deg(p: &UPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

pub fn monic(p: &UPoly) -> UPoly {
    match p.last() {
        None => Vec::new(),
        Some(lc) => {
            let inv = lc.inv().unwrap();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn add(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![GaussianRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].clone() + c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].clone() + c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![GaussianRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].clone() + c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].clone() - c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] = out[i + j].clone() + &(ca * cb);
            }
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &UPoly, c: &GaussianRational) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    assert!(!b.is_empty(), "univariate division by zero");
    let db = b.len() - 1;
    let lb_inv = b.last().unwrap().inv().unwrap();
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![GaussianRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - 1 - db;
        let q = rem.last().unwrap() * &lb_inv;
        quot[shift] = q.clone();
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                rem[shift + j] = rem[shift + j].clone() - &(cb * &q);
            }
        }
        // the leading term cancels by construction
        rem.truncate(rem.len() - 1);
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn derivative(p: &UPoly) -> UPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (i, c) in p.iter().enumerate().skip(1) {
        out.push(c * &GaussianRational::from_int(i as i64));
    }
    trim(&mut out);
    out
}

pub fn eval(p: &UPoly, x: &GaussianRational) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

pub fn eval_box(p: &UPoly, x: &ComplexBox) -> ComplexBox {
    let prec = x.precision;
    let mut acc = ComplexBox::exact(&GaussianRational::zero(), prec);
    for c in p.iter().rev() {
        acc = acc.mul(x).add(&ComplexBox::exact(c, prec));
    }
    acc
}

/// Yun squarefree decomposition: p = prod_i out[i].1^(out[i].0) with the
/// factors squarefree, pairwise coprime, monic.
pub fn squarefree_decomposition(p: &UPoly) -> Vec<(usize, UPoly)> {
    let p = monic(p);
    if p.len() <= 1 {
        return Vec::new();
    }
    let dp = derivative(&p);
    let a0 = gcd(&p, &dp);
    if a0.len() == 1 {
        return vec![(1, p)];
    }
    let (mut b, _) = divrem(&p, &a0);
    let (mut c, _) = divrem(&dp, &a0);
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let d = sub(&c, &derivative(&b));
        let g = gcd(&b, &d);
        if deg(&g).unwrap_or(0) > 0 {
            out.push((i, monic(&g)));
        }
        let (b2, _) = divrem(&b, &g);
        let (c2, _) = divrem(&d, &g);
        b = b2;
        c = c2;
        i += 1;
        if deg(&b).unwrap_or(0) == 0 {
            break;
        }
    }
    out
}

pub fn squarefree_part(p: &UPoly) -> UPoly {
    let d = derivative(p);
    if is_zero(&d) {
        return monic(p);
    }
    let g = gcd(p, &d);
    let (q, _) = divrem(p, &g);
    monic(&q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn poly(coeffs: &[i64]) -> UPoly {
        let mut p: UPoly = coeffs.iter().map(|&n| c(n)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn divrem_consistency() {
        let a = poly(&[2, 0, -3, 1, 5]);
        let b = poly(&[1, 1]);
        let (q, r) = divrem(&a, &b);
        assert_eq!(add(&mul(&q, &b), &r), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_products() {
        let f = poly(&[1, 1]); // 1 + x
        let g = poly(&[-2, 1]); // -2 + x
        let h = poly(&[3, 0, 1]); // 3 + x^2
        let a = mul(&f, &h);
        let b = mul(&g, &h);
        assert_eq!(gcd(&a, &b), monic(&h));
        assert_eq!(gcd(&f, &g), vec![c(1)]);
    }

    #[test]
    fn yun_structure() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = mul(
            &mul(
                &mul(&mul(&poly(&[-1, 1]), &poly(&[-1, 1])), &poly(&[-1, 1])),
                &mul(&poly(&[2, 1]), &poly(&[2, 1])),
            ),
            &poly(&[1, 0, 1]),
        );
        let dec = squarefree_decomposition(&f);
        let mut recon = vec![c(1)];
        for (m, g) in &dec {
            for _ in 0..*m {
                recon = mul(&recon, g);
            }
        }
        assert_eq!(monic(&recon), monic(&f));
        let mults: Vec<usize> = dec.iter().map(|(m, _)| *m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        assert_eq!(deg(&dec[0].1), Some(2)); // x^2+1
        assert_eq!(deg(&dec[1].1), Some(1)); // x+2
        assert_eq!(deg(&dec[2].1), Some(1)); // x-1
    }
}
