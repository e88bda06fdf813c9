//! Buchberger Gröbner-basis engine over ℚ(i) and zero-dimensional solving
//! by triangular back-substitution, with exact roots where they live in
//! ℚ(i) and certified boxes elsewhere.

use std::collections::BTreeSet;

use crate::arith::{ComplexBox, GaussianRational};
use crate::poly::upoly::{self, UPoly};
use crate::poly::{isolate_squarefree, Monomial, MultiPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// Monomial order: kind plus variable precedence (indices into the shared
/// variable list, most significant first).
#[derive(Clone, Debug)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub precedence: Vec<usize>,
}

impl TermOrder {
    pub fn lex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, precedence: (0..nvars).collect() }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::DegRevLex, precedence: (0..nvars).collect() }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.precedence {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let (da, db) = (a.total_degree(), b.total_degree());
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &v in self.precedence.iter().rev() {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        // smaller exponent in the least significant differing
                        // variable means larger monomial
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Engine polynomial: terms sorted descending under the active order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<(Monomial, GaussianRational)>,
}

impl GPoly {
    fn from_multipoly(p: &MultiPoly, order: &TermOrder) -> Self {
        let mut terms: Vec<(Monomial, GaussianRational)> =
            p.iter_terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        GPoly { terms }
    }

    fn to_multipoly(&self, vars: &[String]) -> MultiPoly {
        let mut p = MultiPoly::zero_owned(vars.to_vec());
        for (m, c) in &self.terms {
            p.terms.insert(m.clone(), c.clone());
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &(Monomial, GaussianRational) {
        &self.terms[0]
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            let inv = lc.inv().unwrap();
            if !inv.is_one() {
                for (_, c) in &mut self.terms {
                    *c = &*c * &inv;
                }
            }
        }
    }

    /// self - c * x^shift * g, merged in one pass.
    fn sub_scaled_shifted(&self, c: &GaussianRational, shift: &Monomial, g: &GPoly, order: &TermOrder) -> GPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < g.terms.len() {
            if j == g.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            let gm = g.terms[j].0.mul(shift);
            if i == self.terms.len() {
                let gc = -&(c * &g.terms[j].1);
                if !gc.is_zero() {
                    out.push((gm, gc));
                }
                j += 1;
                continue;
            }
            match order.cmp(&self.terms[i].0, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let gc = -&(c * &g.terms[j].1);
                    if !gc.is_zero() {
                        out.push((gm, gc));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let merged = &self.terms[i].1 - &(c * &g.terms[j].1);
                    if !merged.is_zero() {
                        out.push((gm, merged));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        GPoly { terms: out }
    }
}

/// Full normal form of p modulo basis (every term reduced).
fn reduce_full(p: &GPoly, basis: &[GPoly], order: &TermOrder) -> GPoly {
    let mut work = p.clone();
    let mut done: Vec<(Monomial, GaussianRational)> = Vec::new();
    'outer: while !work.is_zero() {
        let (m, c) = work.leading().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading();
            if gm.divides(&m) {
                let shift = m.div(gm);
                let factor = &c / gc;
                work = work.sub_scaled_shifted(&factor, &shift, g, order);
                continue 'outer;
            }
        }
        done.push((m.clone(), c));
        work.terms.remove(0);
    }
    GPoly { terms: done }
}

/// A generator set with its order; `reduced` marks the unique reduced basis.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    pub generators: Vec<MultiPoly>,
    pub order: TermOrder,
    pub reduced: bool,
    vars: Vec<String>,
}

impl IdealBasis {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant() && !self.generators[0].is_zero()
    }

    /// Exact normal form; zero iff the polynomial lies in the ideal (for a
    /// reduced basis).
    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        let engine: Vec<GPoly> =
            self.generators.iter().map(|g| GPoly::from_multipoly(g, &self.order)).collect();
        reduce_full(&GPoly::from_multipoly(p, &self.order), &engine, &self.order).to_multipoly(&self.vars)
    }
}

/// Buchberger with the normal selection strategy, product and chain
/// criteria, monic reductions, returning the unique reduced basis.
pub fn buchberger(gens: &[MultiPoly], order: TermOrder) -> IdealBasis {
    let vars = gens
        .first()
        .map(|g| g.vars.clone())
        .expect("buchberger needs at least one generator");
    for g in gens {
        assert_eq!(g.vars, vars, "generators over different variable lists");
    }
    assert_eq!(order.precedence.len(), vars.len(), "order arity mismatch");

    let mut basis: Vec<GPoly> = Vec::new();
    for g in gens {
        let gp = GPoly::from_multipoly(g, &order);
        if !gp.is_zero() {
            basis.push(gp);
        }
    }
    for b in &mut basis {
        b.make_monic();
    }

    // pending pairs keyed by (lcm degree, lcm, i, j) for normal selection
    let mut pending: BTreeSet<(u32, Vec<u32>, usize, usize)> = BTreeSet::new();
    let mut dead: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lcm = |a: &Monomial, b: &Monomial| -> Monomial {
        Monomial(a.0.iter().zip(b.0.iter()).map(|(x, y)| *x.max(y)).collect())
    };
    let mut add_pairs = |pending: &mut BTreeSet<(u32, Vec<u32>, usize, usize)>,
                         basis: &[GPoly],
                         t: usize| {
        for i in 0..t {
            let l = lcm(&basis[i].leading().0, &basis[t].leading().0);
            pending.insert((l.total_degree(), l.0.clone(), i, t));
        }
    };
    for t in 0..basis.len() {
        add_pairs(&mut pending, &basis, t);
    }

    while let Some(entry) = pending.iter().next().cloned() {
        pending.remove(&entry);
        let (_, lcm_exps, i, j) = entry;
        dead.insert((i, j));
        let (lmi, _) = basis[i].leading().clone();
        let (lmj, _) = basis[j].leading().clone();
        let l = Monomial(lcm_exps);
        // product criterion: coprime leading terms
        if lmi.mul(&lmj) == l {
            continue;
        }
        // chain criterion: some k with LT(k) | lcm and both pairs done
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j || g.is_zero() {
                continue;
            }
            if g.leading().0.divides(&l) {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                let p1_live = pending.iter().any(|(_, _, a, b)| (*a, *b) == p1);
                let p2_live = pending.iter().any(|(_, _, a, b)| (*a, *b) == p2);
                if !p1_live && !p2_live && dead.contains(&p1) && dead.contains(&p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        // s-polynomial: x^shift_i * f_i - x^shift_j * f_j (both monic)
        let shift_i = l.div(&lmi);
        let shift_j = l.div(&lmj);
        let shifted_i = GPoly {
            terms: basis[i]
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&shift_i), c.clone()))
                .collect(),
        };
        let spoly = shifted_i.sub_scaled_shifted(&GaussianRational::one(), &shift_j, &basis[j], &order);
        let mut nf = reduce_full(&spoly, &basis, &order);
        if nf.is_zero() {
            continue;
        }
        nf.make_monic();
        basis.push(nf);
        let t = basis.len() - 1;
        add_pairs(&mut pending, &basis, t);
    }

    // minimalize: drop generators whose LT is divisible by another LT
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (lmi, _) = basis[i].leading();
            let (lmj, _) = basis[j].leading();
            if lmj.divides(lmi) && (lmi != lmj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<GPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // inter-reduce to the unique reduced basis
    let mut reduced: Vec<GPoly> = Vec::new();
    for i in 0..minimal.len() {
        let others: Vec<GPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut nf = reduce_full(&minimal[i], &others, &order);
        if !nf.is_zero() {
            nf.make_monic();
            reduced.push(nf);
        }
    }
    reduced.sort_by(|a, b| order.cmp(&b.leading().0, &a.leading().0));

    IdealBasis {
        generators: reduced.iter().map(|g| g.to_multipoly(&vars)).collect(),
        order,
        reduced: true,
        vars,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dimension {
    Empty,
    Finite,
    PositiveDimensional,
}

/// Staircase criterion on a reduced basis: the quotient is finite iff every
/// variable has a pure power among the leading terms.
pub fn dimension_check(basis: &IdealBasis) -> Dimension {
    if basis.is_unit_ideal() {
        return Dimension::Empty;
    }
    let n = basis.vars.len();
    let mut covered = vec![false; n];
    for g in &basis.generators {
        let engine = GPoly::from_multipoly(g, &basis.order);
        if engine.is_zero() {
            continue;
        }
        let (lm, _) = engine.leading();
        let support: Vec<usize> = (0..n).filter(|&v| lm.0[v] > 0).collect();
        if support.len() == 1 {
            covered[support[0]] = true;
        }
    }
    if covered.iter().all(|&c| c) {
        Dimension::Finite
    } else {
        Dimension::PositiveDimensional
    }
}

/// A coordinate of a solution point: exact in ℚ(i), or a certified box with
/// the minimal polynomial it satisfies over the already-fixed coordinates.
#[derive(Clone, Debug)]
pub enum Coordinate {
    Exact(GaussianRational),
    Numeric { minpoly: Option<UPoly>, bx: ComplexBox },
}

impl Coordinate {
    pub fn as_box(&self, precision: u32) -> ComplexBox {
        match self {
            Coordinate::Exact(v) => ComplexBox::exact(v, precision),
            Coordinate::Numeric { bx, .. } => bx.clone(),
        }
    }

    pub fn exact(&self) -> Option<&GaussianRational> {
        match self {
            Coordinate::Exact(v) => Some(v),
            Coordinate::Numeric { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolutionPoint {
    /// one coordinate per variable, in the basis' variable order
    pub coords: Vec<Coordinate>,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionStatus {
    Empty,
    Finite,
    PositiveDimensional,
}

#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub status: SolutionStatus,
    pub points: Vec<SolutionPoint>,
}

/// Root of a univariate polynomial over ℚ(i).
#[derive(Clone, Debug)]
pub enum UniRoot {
    Exact(GaussianRational),
    Numeric { minpoly: UPoly, bx: ComplexBox },
}

/// All distinct roots: exact ℚ(i) values wherever linear/quadratic solving
/// or certified rational reconstruction finds them, certified boxes (with
/// the residual factor as minimal polynomial) for the rest.
pub fn solve_univariate(p: &UPoly, precision: u32) -> Result<Vec<UniRoot>> {
    let mut work = upoly::monic(p);
    upoly::trim(&mut work);
    if work.is_empty() {
        return Err(Error::InvalidInput("zero polynomial has every value as root".into()));
    }
    let mut out: Vec<UniRoot> = Vec::new();
    // distinct roots only
    work = upoly::squarefree_part(&work);
    loop {
        match upoly::deg(&work) {
            None | Some(0) => break,
            Some(1) => {
                out.push(UniRoot::Exact(-(&work[0] / &work[1])));
                break;
            }
            Some(2) => {
                let (a, b, c) = (&work[2], &work[1], &work[0]);
                let disc = &(b * b) - &(&GaussianRational::from_int(4) * &(a * c));
                match disc.sqrt_exact() {
                    Some(sq) => {
                        let two_a = &GaussianRational::from_int(2) * a;
                        out.push(UniRoot::Exact(&(&-b + &sq) / &two_a));
                        if !sq.is_zero() {
                            out.push(UniRoot::Exact(&(&-b - &sq) / &two_a));
                        }
                    }
                    None => {
                        for bx in isolate_squarefree(&work, precision)? {
                            out.push(UniRoot::Numeric { minpoly: work.clone(), bx });
                        }
                    }
                }
                break;
            }
            Some(_) => {
                // certified isolation, then rational reconstruction at
                // escalating precision; deflate exact hits and repeat
                let mut found_exact: Vec<GaussianRational> = Vec::new();
                let mut last_boxes: Option<Vec<ComplexBox>> = None;
                for p_bits in [64u32, 128, 256, 512] {
                    let boxes = isolate_squarefree(&work, p_bits)?;
                    for bx in &boxes {
                        let cand = GaussianRational::new(
                            crate::arith::simplest_rational_in(&bx.re.lo, &bx.re.hi),
                            crate::arith::simplest_rational_in(&bx.im.lo, &bx.im.hi),
                        );
                        if upoly::eval(&work, &cand).is_zero() && !found_exact.contains(&cand) {
                            found_exact.push(cand);
                        }
                    }
                    if !found_exact.is_empty() {
                        break;
                    }
                    last_boxes = Some(boxes);
                }
                if found_exact.is_empty() {
                    let boxes = match last_boxes {
                        Some(b) => b,
                        None => isolate_squarefree(&work, precision)?,
                    };
                    for bx in boxes {
                        out.push(UniRoot::Numeric { minpoly: work.clone(), bx });
                    }
                    break;
                }
                for r in found_exact {
                    let lin = vec![-&r, GaussianRational::one()];
                    let (q, rem) = upoly::divrem(&work, &lin);
                    debug_assert!(upoly::is_zero(&rem));
                    work = q;
                    out.push(UniRoot::Exact(r));
                }
            }
        }
    }
    Ok(out)
}

/// Solve a zero-dimensional system from its reduced lex basis by triangular
/// back-substitution. Exact coordinates wherever roots lie in ℚ(i); numeric
/// coordinates carry certified boxes and are verified against every
/// generator by interval evaluation.
pub fn solve_zero_dim(basis: &IdealBasis, precision: u32) -> Result<SolutionSet> {
    if basis.order.kind != OrderKind::Lex {
        return Err(Error::InvalidInput("zero-dimensional solving needs a lex basis".into()));
    }
    if basis.is_unit_ideal() {
        return Ok(SolutionSet { status: SolutionStatus::Empty, points: Vec::new() });
    }
    match dimension_check(basis) {
        Dimension::Empty => {
            return Ok(SolutionSet { status: SolutionStatus::Empty, points: Vec::new() })
        }
        Dimension::PositiveDimensional => {
            return Ok(SolutionSet { status: SolutionStatus::PositiveDimensional, points: Vec::new() })
        }
        Dimension::Finite => {}
    }
    let mut points = solve_rec(&basis.generators, &basis.order, precision)?;
    // verify numeric points against every generator by interval evaluation
    points.retain(|pt| {
        if pt.exact {
            return true;
        }
        basis.generators.iter().all(|g| {
            let boxes: Vec<ComplexBox> = pt.coords.iter().map(|c| c.as_box(precision)).collect();
            g.eval_boxes(&boxes).contains_zero()
        })
    });
    sort_points(&mut points);
    Ok(SolutionSet { status: SolutionStatus::Finite, points })
}

fn sort_points(points: &mut [SolutionPoint]) {
    points.sort_by(|a, b| {
        for (ca, cb) in a.coords.iter().zip(b.coords.iter()) {
            let ma = ca.as_box(64).mid();
            let mb = cb.as_box(64).mid();
            let o = ma.re.cmp(&mb.re).then_with(|| ma.im.cmp(&mb.im));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    });
}

fn solve_rec(gens: &[MultiPoly], order: &TermOrder, precision: u32) -> Result<Vec<SolutionPoint>> {
    let vars = gens[0].vars.clone();
    let n = vars.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    // least significant variable under lex precedence
    let least = *order.precedence.last().unwrap();
    if n == 1 {
        let p = to_univariate(&gens_gcd(gens), 0)?;
        let roots = solve_univariate(&p, precision)?;
        return Ok(roots
            .into_iter()
            .map(|r| match r {
                UniRoot::Exact(v) => SolutionPoint { coords: vec![Coordinate::Exact(v)], exact: true },
                UniRoot::Numeric { minpoly, bx } => SolutionPoint {
                    coords: vec![Coordinate::Numeric { minpoly: Some(minpoly), bx }],
                    exact: false,
                },
            })
            .collect());
    }
    // eliminant: generator involving only the least variable
    let elim = gens
        .iter()
        .find(|g| univariate_in(g, least))
        .ok_or_else(|| Error::InvalidInput("no univariate eliminant in lex basis".into()))?;
    let elim_poly = to_univariate(elim, least)?;
    let roots = solve_univariate(&elim_poly, precision)?;
    let mut out = Vec::new();
    for root in roots {
        match root {
            UniRoot::Exact(v) => {
                let substituted: Vec<MultiPoly> = gens
                    .iter()
                    .map(|g| substitute_value(g, least, &v))
                    .filter(|g| !g.is_zero())
                    .collect();
                let reduced_vars: Vec<&str> = vars
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != least)
                    .map(|(_, s)| s.as_str())
                    .collect();
                if substituted.is_empty() {
                    // whole fiber is free: should not happen for zero-dim
                    return Err(Error::InvalidInput("unexpected free fiber in solve".into()));
                }
                let projected: Result<Vec<MultiPoly>> =
                    substituted.iter().map(|g| g.project_vars(&reduced_vars)).collect();
                let projected = projected?;
                let sub_order = restrict_order(order, least);
                let sub_basis = buchberger(&projected, sub_order.clone());
                if sub_basis.is_unit_ideal() {
                    continue;
                }
                let sub_points = solve_rec(&sub_basis.generators, &sub_order, precision)?;
                for sp in sub_points {
                    let mut coords = sp.coords;
                    coords.insert(insert_position(order, least), Coordinate::Exact(v.clone()));
                    let exact = sp.exact;
                    out.push(SolutionPoint { coords, exact });
                }
            }
            UniRoot::Numeric { minpoly, bx } => {
                let fixed = Coordinate::Numeric { minpoly: Some(minpoly), bx };
                let pts = numeric_tail(gens, order, least, fixed, precision)?;
                out.extend(pts);
            }
        }
    }
    Ok(out)
}

/// Back-substitute through the triangular chain with interval coefficients
/// once a coordinate has gone numeric. Points come back flagged numeric and
/// are later verified against all generators.
fn numeric_tail(
    gens: &[MultiPoly],
    order: &TermOrder,
    least: usize,
    fixed: Coordinate,
    precision: u32,
) -> Result<Vec<SolutionPoint>> {
    let n = gens[0].vars.len();
    // remaining variables in ascending precedence significance
    let mut chain_vars: Vec<usize> = order.precedence.iter().rev().copied().filter(|&v| v != least).collect();
    let mut partial: Vec<(usize, Coordinate)> = vec![(least, fixed)];
    let mut states: Vec<Vec<(usize, Coordinate)>> = vec![partial.clone()];
    while let Some(v) = chain_vars.first().copied() {
        chain_vars.remove(0);
        // triangular generator: univariate in v over the already-fixed vars
        let fixed_set: Vec<usize> = states[0].iter().map(|(i, _)| *i).collect();
        let gen = gens
            .iter()
            .find(|g| involves_only(g, v, &fixed_set) && degree_in(g, v) > 0)
            .ok_or_else(|| {
                Error::InvalidInput("triangular chain broken in numeric back-substitution".into())
            })?;
        let mut next_states = Vec::new();
        for st in &states {
            let coeffs = interval_coefficients(gen, v, st, precision)?;
            let boxes = isolate_interval_poly(&coeffs, precision)?;
            for bx in boxes {
                let mut ns = st.clone();
                ns.push((v, Coordinate::Numeric { minpoly: None, bx }));
                next_states.push(ns);
            }
        }
        states = next_states;
        partial.clear();
    }
    Ok(states
        .into_iter()
        .map(|st| {
            let mut coords: Vec<Option<Coordinate>> = vec![None; n];
            for (v, c) in st {
                coords[v] = Some(c);
            }
            SolutionPoint {
                coords: coords.into_iter().map(|c| c.expect("all coordinates fixed")).collect(),
                exact: false,
            }
        })
        .collect())
}

/// Coefficients of gen as a univariate polynomial in v, with the fixed
/// coordinates substituted as boxes.
fn interval_coefficients(
    gen: &MultiPoly,
    v: usize,
    fixed: &[(usize, Coordinate)],
    precision: u32,
) -> Result<Vec<ComplexBox>> {
    let d = degree_in(gen, v) as usize;
    let zero = ComplexBox::exact(&GaussianRational::zero(), precision);
    let mut coeffs = vec![zero; d + 1];
    for (m, c) in gen.iter_terms() {
        let mut term = ComplexBox::exact(c, precision);
        for (idx, &e) in m.0.iter().enumerate() {
            if idx == v || e == 0 {
                continue;
            }
            let coord = fixed
                .iter()
                .find(|(i, _)| *i == idx)
                .ok_or_else(|| Error::InvalidInput("unfixed variable in triangular chain".into()))?;
            term = term.mul(&coord.1.as_box(precision).pow(e));
        }
        let k = m.0[v] as usize;
        coeffs[k] = coeffs[k].add(&term);
    }
    Ok(coeffs)
}

/// Root isolation for a polynomial with interval coefficients: approximate
/// with the midpoint polynomial, certify by interval Newton evaluated with
/// the interval coefficients. Numeric-mode only; results are sound boxes
/// but completeness rests on the midpoint approximation.
fn isolate_interval_poly(coeffs: &[ComplexBox], precision: u32) -> Result<Vec<ComplexBox>> {
    let mut cs = coeffs.to_vec();
    while cs.last().map_or(false, |c| c.is_point() && c.contains_zero()) {
        cs.pop();
    }
    let Some(lead) = cs.last() else {
        return Err(Error::InvalidInput("zero interval polynomial".into()));
    };
    if lead.contains_zero() {
        return Err(Error::PrecisionExhausted(
            "leading coefficient box contains zero; raise precision".into(),
        ));
    }
    let mid_poly: UPoly = cs.iter().map(|c| c.mid()).collect();
    let sf = upoly::squarefree_part(&mid_poly);
    let approx_boxes = isolate_squarefree(&sf, 52)?;
    let mut out = Vec::new();
    for ab in approx_boxes {
        let (re, im) = ab.to_f64_pair();
        match certify_interval_root(&cs, re, im, precision) {
            Some(b) => out.push(b),
            None => {
                return Err(Error::PrecisionExhausted(
                    "interval Newton failed on interval-coefficient polynomial".into(),
                ))
            }
        }
    }
    Ok(out)
}

fn eval_interval_poly(coeffs: &[ComplexBox], x: &ComplexBox) -> ComplexBox {
    let prec = x.precision;
    let mut acc = ComplexBox::exact(&GaussianRational::zero(), prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

fn certify_interval_root(coeffs: &[ComplexBox], re: f64, im: f64, precision: u32) -> Option<ComplexBox> {
    let deriv: Vec<ComplexBox> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.mul_scalar(&GaussianRational::from_int(k as i64)))
        .collect();
    for radius_bits in [36u32, 44, 28, 52] {
        let x = ComplexBox::from_f64_center(re, im, radius_bits, precision);
        let mid = ComplexBox::exact(&x.mid(), precision);
        let fm = eval_interval_poly(coeffs, &mid);
        let dfx = eval_interval_poly(&deriv, &x);
        let Some(quot) = fm.div(&dfx) else { continue };
        let n = mid.sub(&quot);
        if n.strictly_inside(&x) {
            // contract a few times
            let mut cur = n.intersect(&x)?;
            for _ in 0..64 {
                let target = crate::arith::Rational::new(
                    num_bigint::BigInt::from(1),
                    num_bigint::BigInt::from(1) << precision,
                );
                if cur.width() <= target {
                    break;
                }
                let mid = ComplexBox::exact(&cur.mid(), precision);
                let fm = eval_interval_poly(coeffs, &mid);
                let dfx = eval_interval_poly(&deriv, &cur);
                let Some(quot) = fm.div(&dfx) else { break };
                let nxt = mid.sub(&quot).round_out(precision + 32);
                match nxt.intersect(&cur) {
                    Some(c2) => {
                        if c2.width() >= cur.width() {
                            break;
                        }
                        cur = c2;
                    }
                    None => break,
                }
            }
            return Some(cur);
        }
    }
    None
}

fn univariate_in(g: &MultiPoly, v: usize) -> bool {
    !g.is_zero()
        && g.iter_terms().all(|(m, _)| {
            m.0.iter().enumerate().all(|(i, &e)| i == v || e == 0)
        })
}

fn involves_only(g: &MultiPoly, v: usize, fixed: &[usize]) -> bool {
    g.iter_terms().all(|(m, _)| {
        m.0.iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || i == v || fixed.contains(&i))
    })
}

fn degree_in(g: &MultiPoly, v: usize) -> u32 {
    g.iter_terms().map(|(m, _)| m.0[v]).max().unwrap_or(0)
}

fn to_univariate(g: &MultiPoly, v: usize) -> Result<UPoly> {
    let d = degree_in(g, v) as usize;
    let mut out = vec![GaussianRational::zero(); d + 1];
    for (m, c) in g.iter_terms() {
        if m.0.iter().enumerate().any(|(i, &e)| i != v && e > 0) {
            return Err(Error::InvalidInput("polynomial is not univariate".into()));
        }
        out[m.0[v] as usize] = c.clone();
    }
    upoly::trim(&mut out);
    Ok(out)
}

fn gens_gcd(gens: &[MultiPoly]) -> MultiPoly {
    // single-variable case: gcd of all generators
    let polys: Vec<UPoly> = gens.iter().filter_map(|g| to_univariate(g, 0).ok()).collect();
    let mut acc = polys[0].clone();
    for p in &polys[1..] {
        acc = upoly::gcd(&acc, p);
    }
    let vars: Vec<&str> = gens[0].vars.iter().map(|s| s.as_str()).collect();
    let mut out = MultiPoly::zero(&vars);
    for (k, c) in acc.iter().enumerate() {
        if !c.is_zero() {
            out.terms.insert(Monomial(vec![k as u32]), c.clone());
        }
    }
    out
}

fn substitute_value(g: &MultiPoly, v: usize, value: &GaussianRational) -> MultiPoly {
    let mut out = MultiPoly::zero_owned(g.vars.clone());
    for (m, c) in g.iter_terms() {
        let e = m.0[v];
        let mut me = m.clone();
        me.0[v] = 0;
        let scaled = c * &value.pow(e);
        if scaled.is_zero() {
            continue;
        }
        match out.terms.entry(me) {
            std::collections::btree_map::Entry::Vacant(en) => {
                en.insert(scaled);
            }
            std::collections::btree_map::Entry::Occupied(mut en) => {
                let s = &*en.get() + &scaled;
                if s.is_zero() {
                    en.remove();
                } else {
                    *en.get_mut() = s;
                }
            }
        }
    }
    out
}

fn restrict_order(order: &TermOrder, removed: usize) -> TermOrder {
    let precedence: Vec<usize> = order
        .precedence
        .iter()
        .filter(|&&v| v != removed)
        .map(|&v| if v > removed { v - 1 } else { v })
        .collect();
    TermOrder { kind: order.kind, precedence }
}

fn insert_position(order: &TermOrder, least: usize) -> usize {
    // coordinates are stored in variable-list order; the removed variable
    // re-enters at its original index
    least
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(text: &str, vars: &[&str]) -> MultiPoly {
        parse_poly(text, vars).unwrap()
    }

    #[test]
    fn already_a_basis() {
        let vars = ["x", "y"];
        let basis = buchberger(&[p("x - 1", &vars), p("y - 2", &vars)], TermOrder::lex(2));
        assert_eq!(basis.generators.len(), 2);
        assert_eq!(basis.generators[0], p("x - 1", &vars));
        assert_eq!(basis.generators[1], p("y - 2", &vars));
    }

    #[test]
    fn textbook_lex_basis() {
        // groebner of (x^2 + y^2 - 1, x - y), lex x > y: {x - y, y^2 - 1/2}
        let vars = ["x", "y"];
        let basis = buchberger(&[p("x^2 + y^2 - 1", &vars), p("x - y", &vars)], TermOrder::lex(2));
        assert_eq!(basis.generators.len(), 2);
        assert_eq!(basis.generators[0], p("x - y", &vars));
        assert_eq!(basis.generators[1], p("y^2 - 1/2", &vars));
    }

    #[test]
    fn normal_form_of_members_is_zero() {
        let vars = ["x", "y", "z"];
        let gens = [
            p("x^2*y - z", &vars),
            p("x*z - y^2", &vars),
            p("y*z - x", &vars),
        ];
        for order in [TermOrder::lex(3), TermOrder::degrevlex(3)] {
            let basis = buchberger(&gens, order);
            for g in &gens {
                assert!(basis.normal_form(g).is_zero());
            }
        }
    }

    #[test]
    fn reduced_basis_unique_under_shuffle_and_rescale() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let vars = ["x", "y", "z"];
        let gens = vec![
            p("x^2 + y + z - 1", &vars),
            p("x + y^2 + z - 1", &vars),
            p("x + y + z^2 - 1", &vars),
        ];
        let reference = buchberger(&gens, TermOrder::lex(3));
        for _ in 0..5 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            let rescaled: Vec<MultiPoly> = shuffled
                .iter()
                .map(|g| {
                    let c = GaussianRational::from_pair(
                        (rng.gen_range(1..7), 1),
                        (rng.gen_range(-3..4), 1),
                    );
                    g.scale(&c)
                })
                .collect();
            let again = buchberger(&rescaled, TermOrder::lex(3));
            assert_eq!(reference.generators, again.generators);
        }
    }

    #[test]
    fn dimension_examples() {
        let vars = ["x", "y"];
        let unit = buchberger(&[p("3", &vars)], TermOrder::lex(2));
        assert_eq!(dimension_check(&unit), Dimension::Empty);
        let fin = buchberger(&[p("x^2", &vars), p("y^3", &vars)], TermOrder::lex(2));
        assert_eq!(dimension_check(&fin), Dimension::Finite);
        let pos = buchberger(&[p("x*y", &vars)], TermOrder::lex(2));
        assert_eq!(dimension_check(&pos), Dimension::PositiveDimensional);
    }

    #[test]
    fn solve_linear_point() {
        let vars = ["a", "b"];
        let basis = buchberger(&[p("a - 1", &vars), p("b + 2", &vars)], TermOrder::lex(2));
        let sol = solve_zero_dim(&basis, 128).unwrap();
        assert_eq!(sol.status, SolutionStatus::Finite);
        assert_eq!(sol.points.len(), 1);
        let pt = &sol.points[0];
        assert!(pt.exact);
        assert_eq!(pt.coords[0].exact().unwrap(), &GaussianRational::from_int(1));
        assert_eq!(pt.coords[1].exact().unwrap(), &GaussianRational::from_int(-2));
    }

    #[test]
    fn solve_sqrt2_numeric_with_minpoly() {
        let vars = ["x"];
        let basis = buchberger(&[p("x^2 - 2", &vars)], TermOrder::lex(1));
        let sol = solve_zero_dim(&basis, 128).unwrap();
        assert_eq!(sol.points.len(), 2);
        for pt in &sol.points {
            assert!(!pt.exact);
            match &pt.coords[0] {
                Coordinate::Numeric { minpoly: Some(mp), bx } => {
                    assert_eq!(upoly::deg(mp), Some(2));
                    // box contains a value squaring to 2 within the box
                    let sq = bx.mul(bx);
                    assert!(sq.contains(&GaussianRational::from_int(2)));
                }
                other => panic!("expected numeric coordinate, got {other:?}"),
            }
        }
    }

    #[test]
    fn solve_gaussian_exact_roots() {
        // x^2 + 1 factors over Q(i): expect exact ±i
        let vars = ["x"];
        let basis = buchberger(&[p("x^2 + 1", &vars)], TermOrder::lex(1));
        let sol = solve_zero_dim(&basis, 128).unwrap();
        assert_eq!(sol.points.len(), 2);
        for pt in &sol.points {
            assert!(pt.exact);
        }
    }

    #[test]
    fn solve_constructed_product_system() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4242);
        let vars = ["x", "y"];
        for _ in 0..10 {
            let a = rng.gen_range(-5..6);
            let b = rng.gen_range(-5..6);
            let c = rng.gen_range(-5..6);
            if a == b {
                continue;
            }
            // x in {a, b}; y = c - x
            let gx = format!("(x - {a})*(x - {b})").replace("- -", "+ ");
            let gy = format!("y - {c} + x").replace("- -", "+ ");
            let basis = buchberger(&[p(&gx, &vars), p(&gy, &vars)], TermOrder::lex(2));
            let sol = solve_zero_dim(&basis, 128).unwrap();
            assert_eq!(sol.points.len(), 2);
            let mut xs: Vec<i64> = Vec::new();
            for pt in &sol.points {
                assert!(pt.exact);
                let x = pt.coords[0].exact().unwrap();
                let y = pt.coords[1].exact().unwrap();
                assert_eq!(&(x + y), &GaussianRational::from_int(c));
                let xr = x.re.numer().to_string().parse::<i64>().unwrap();
                xs.push(xr);
            }
            xs.sort();
            let mut expect = vec![a, b];
            expect.sort();
            assert_eq!(xs, expect);
        }
    }

    #[test]
    fn exact_points_satisfy_generators() {
        let vars = ["u", "v"];
        let gens = [p("u^2 - v", &vars), p("v^2 - 4", &vars)];
        let basis = buchberger(&gens, TermOrder::lex(2));
        let sol = solve_zero_dim(&basis, 128).unwrap();
        assert!(!sol.points.is_empty());
        for pt in &sol.points {
            if pt.exact {
                let coords: Vec<GaussianRational> =
                    pt.coords.iter().map(|c| c.exact().unwrap().clone()).collect();
                for g in &gens {
                    assert!(g.eval(&coords).is_zero());
                }
            } else {
                for g in &gens {
                    let boxes: Vec<ComplexBox> = pt.coords.iter().map(|c| c.as_box(128)).collect();
                    assert!(g.eval_boxes(&boxes).contains_zero());
                }
            }
        }
    }
}
