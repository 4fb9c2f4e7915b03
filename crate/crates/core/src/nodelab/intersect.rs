//! Complete intersection of two plane curves over a prime field, realized
//! concretely: change coordinates until the chart is generic, eliminate one
//! variable, factor the resultant, and rebuild every intersection point with
//! coordinates in one common extension field.

use std::collections::BTreeMap;

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use super::extpoly::{self, ExtPoly};
use super::field::{ExtElem, FieldContext, Frobenius, EXTENSION_CAP};
use super::form::HomogeneousForm;
use super::fppoly::{self, FpPoly};
use super::resultant::resultant;
use super::scalar::{invm, mulm, subm, uniform_below};
use super::NodeLabError;

/// A projective point with extension-field coordinates, normalized so that
/// the last nonzero coordinate is one; equality is coordinate-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub coords: [ExtElem; 3],
    pub multiplicity: u32,
}

impl ProjPoint {
    fn normalize(ctx: &FieldContext, coords: [ExtElem; 3], multiplicity: u32) -> ProjPoint {
        let last = (0..3)
            .rev()
            .find(|&i| !coords[i].is_zero())
            .expect("projective point has a nonzero coordinate");
        let inv = ctx.inv(&coords[last]).expect("nonzero");
        let coords = [
            ctx.mul(&coords[0], &inv),
            ctx.mul(&coords[1], &inv),
            ctx.mul(&coords[2], &inv),
        ];
        ProjPoint {
            coords,
            multiplicity,
        }
    }

    fn sort_key(&self) -> (&[u64], &[u64], &[u64]) {
        (
            &self.coords[0].coeffs,
            &self.coords[1].coeffs,
            &self.coords[2].coeffs,
        )
    }
}

/// The intersection scheme of two curves: the common extension field, the
/// points with multiplicities (sorted, deterministic), and how many charts
/// were tried.
#[derive(Debug, Clone)]
pub struct Intersection {
    pub field: FieldContext,
    pub points: Vec<ProjPoint>,
    pub chart_attempts: u32,
}

impl Intersection {
    /// Total intersection multiplicity; equals the product of the curve
    /// degrees when the computation succeeds.
    pub fn total_multiplicity(&self) -> u32 {
        self.points.iter().map(|pt| pt.multiplicity).sum()
    }
}

fn random_invertible(p: u64, rng: &mut impl RngCore) -> [[u64; 3]; 3] {
    loop {
        let mut m = [[0u64; 3]; 3];
        for row in m.iter_mut() {
            for slot in row.iter_mut() {
                *slot = uniform_below(rng, p);
            }
        }
        if det3(&m, p) != 0 {
            return m;
        }
    }
}

fn det3(m: &[[u64; 3]; 3], p: u64) -> u64 {
    let minor = |a: u64, b: u64, c: u64, d: u64| subm(mulm(a, d, p), mulm(b, c, p), p);
    let t0 = mulm(m[0][0], minor(m[1][1], m[1][2], m[2][1], m[2][2]), p);
    let t1 = mulm(m[0][1], minor(m[1][0], m[1][2], m[2][0], m[2][2]), p);
    let t2 = mulm(m[0][2], minor(m[1][0], m[1][1], m[2][0], m[2][1]), p);
    subm(t0 + t2, t1, p) % p
}

/// Compute the full intersection of two plane curves of positive degree.
/// Deterministic in `(f, g, seed)`; the chart search, resultant factoring
/// and subfield splitting all draw from one seeded stream.
pub fn intersect_plane_curves(
    f: &HomogeneousForm,
    g: &HomogeneousForm,
    seed: u64,
    retry_budget: u32,
) -> Result<Intersection, NodeLabError> {
    if f.prime() != g.prime() {
        return Err(NodeLabError::FormShape("mixed primes".to_string()));
    }
    if f.degree() == 0 || g.degree() == 0 || f.is_zero() || g.is_zero() {
        return Err(NodeLabError::FormShape(
            "intersection needs two curves of positive degree".to_string(),
        ));
    }
    let p = f.prime();
    let m = f.degree();
    let n = g.degree();
    let target = (m * n) as usize;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);

    for attempt in 0..retry_budget {
        let mat = if attempt == 0 {
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        } else {
            random_invertible(p, &mut rng)
        };
        let f1 = f.substitute_linear(&mat);
        let g1 = g.substitute_linear(&mat);
        // generic chart: the projection center [1:0:0] must avoid both curves
        if f1.var_degree(0) != Some(m) || g1.var_degree(0) != Some(n) {
            continue;
        }
        let r = match resultant(&f1, &g1, 0) {
            Ok(out) => out.coeffs,
            Err(NodeLabError::CommonComponent) => return Err(NodeLabError::CommonComponent),
            Err(e) => return Err(e),
        };
        // no intersection may sit on the line w2 = 0 of this chart
        if fppoly::deg(&r) != Some(target) {
            continue;
        }
        let factors = fppoly::factor(&r, p, &mut rng);
        let ext_degree = factors
            .iter()
            .fold(1u64, |acc, (q, _)| lcm(acc, fppoly::deg(q).unwrap() as u64));
        if ext_degree as usize > EXTENSION_CAP {
            return Err(NodeLabError::ExtensionCap {
                needed: ext_degree as usize,
                cap: EXTENSION_CAP,
            });
        }
        let big = FieldContext::new(p, ext_degree as usize)?;
        let frob = Frobenius::new(&big);
        let mut subfields = SubfieldCache::new();
        let mut points: Vec<ProjPoint> = Vec::new();
        let mut chart_ok = true;

        'factors: for (q, mult) in &factors {
            let e = fppoly::deg(q).unwrap();
            let roots = roots_in_extension(q, e, &big, &frob, &mut subfields, &mut rng);
            for tau in roots {
                let fu = univariate_at(&f1, &big, &tau);
                let gu = univariate_at(&g1, &big, &tau);
                let h = extpoly::gcd(&fu, &gu, &big);
                let hd = extpoly::deg(&h).expect("resultant root forces a common root");
                if hd != 1 {
                    // two intersection points share this projection ratio
                    chart_ok = false;
                    break 'factors;
                }
                let x = big.neg(&h[0]);
                let chart_pt = [x, tau, big.one()];
                let orig = apply_matrix(&big, &mat, &chart_pt);
                points.push(ProjPoint::normalize(&big, orig, *mult));
            }
        }
        if !chart_ok {
            continue;
        }
        points.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        for w in points.windows(2) {
            assert!(
                w[0].coords != w[1].coords,
                "distinct resultant roots produced equal points"
            );
        }
        let total: u32 = points.iter().map(|pt| pt.multiplicity).sum();
        assert_eq!(total as usize, target, "intersection multiplicities must sum to the degree product");
        return Ok(Intersection {
            field: big,
            points,
            chart_attempts: attempt + 1,
        });
    }
    Err(NodeLabError::RetryBudget(retry_budget))
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `f(x, tau, 1)` as a univariate polynomial in `x` over the big field.
fn univariate_at(f: &HomogeneousForm, big: &FieldContext, tau: &ExtElem) -> ExtPoly {
    let m = f.var_degree(0).unwrap_or(0);
    let point = [big.zero(), tau.clone(), big.one()];
    let mut out = Vec::with_capacity(m as usize + 1);
    for j in 0..=m {
        out.push(f.coeff_of_var_power(0, j).eval_ext(big, &point));
    }
    extpoly::trim(&mut out);
    out
}

fn apply_matrix(big: &FieldContext, mat: &[[u64; 3]; 3], pt: &[ExtElem; 3]) -> [ExtElem; 3] {
    let mut out = [big.zero(), big.zero(), big.zero()];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut acc = big.zero();
        for (j, coord) in pt.iter().enumerate() {
            acc = big.add(&acc, &big.mul_scalar(coord, mat[i][j]));
        }
        *slot = acc;
    }
    out
}

/// Cached per-degree subfield data: a generator of the degree-`e` subfield
/// of the big field and a standalone presentation of `F_(p^e)`.
type SubfieldCache = BTreeMap<usize, (ExtElem, FieldContext)>;

/// All roots of a monic irreducible `q` of degree `e` over the prime field,
/// as elements of the degree-`L` extension (`e` divides `L`). One root is
/// found inside the degree-`e` subfield and the rest are its Frobenius
/// orbit.
fn roots_in_extension(
    q: &FpPoly,
    e: usize,
    big: &FieldContext,
    frob: &Frobenius,
    subfields: &mut SubfieldCache,
    rng: &mut impl RngCore,
) -> Vec<ExtElem> {
    let p = big.prime();
    if e == 1 {
        // q = x + c
        let c = q[0];
        return vec![big.scalar(subm(0, c, p))];
    }
    if !subfields.contains_key(&e) {
        let data = subfield_generator(big, frob, e, rng);
        subfields.insert(e, data);
    }
    let (w, small) = &subfields[&e];
    let q_small: ExtPoly = q.iter().map(|&c| small.scalar(c)).collect();
    let rho_small = extpoly::find_root(&q_small, small, rng);
    // embed: the subfield generator maps to w
    let rho = extpoly::eval_scalar_poly(&rho_small.coeffs, w, big);
    let mut roots = Vec::with_capacity(e);
    roots.push(rho);
    for j in 1..e {
        let next = frob.apply(big, &roots[j - 1]);
        roots.push(next);
    }
    for root in &roots {
        assert!(
            extpoly::eval_scalar_poly(q, root, big).is_zero(),
            "embedded root must satisfy its factor"
        );
    }
    roots
}

/// A generator of the degree-`e` subfield of the big field, together with a
/// copy of `F_(p^e)` presented by its minimal polynomial: draw random
/// elements, project them into the subfield with the Frobenius trace, and
/// keep the first whose minimal polynomial has full degree `e`.
fn subfield_generator(
    big: &FieldContext,
    frob: &Frobenius,
    e: usize,
    rng: &mut impl RngCore,
) -> (ExtElem, FieldContext) {
    let l = big.ext_degree();
    debug_assert_eq!(l % e, 0);
    loop {
        let z = big.random(rng);
        // trace from F_(p^L) down to F_(p^e)
        let mut w = z.clone();
        let mut cur = z;
        for _ in 1..(l / e) {
            cur = frob.apply_iterated(big, &cur, e);
            w = big.add(&w, &cur);
        }
        if let Some(mu) = minimal_polynomial(big, &w, e) {
            let small = FieldContext::with_modulus(big.prime(), mu);
            return (w, small);
        }
    }
}

/// Minimal polynomial of `w` over the prime field, provided its degree is
/// exactly `expected`; `None` when `w` generates a proper subfield.
fn minimal_polynomial(big: &FieldContext, w: &ExtElem, expected: usize) -> Option<FpPoly> {
    let l = big.ext_degree();
    let p = big.prime();
    // reduced basis rows: (pivot column, vector, combination over powers)
    let mut reduced: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut pow = big.one();
    for t in 0..=expected {
        let mut v = pow.coeffs.clone();
        let mut comb = vec![0u64; t + 1];
        comb[t] = 1;
        for (pivot, bv, bc) in &reduced {
            let factor = v[*pivot];
            if factor == 0 {
                continue;
            }
            for j in 0..l {
                v[j] = subm(v[j], mulm(factor, bv[j], p), p);
            }
            for (j, &c) in bc.iter().enumerate() {
                comb[j] = subm(comb[j], mulm(factor, c, p), p);
            }
        }
        if v.iter().all(|&x| x == 0) {
            // dependency found: monic by construction (comb[t] = 1)
            return if t == expected { Some(comb) } else { None };
        }
        let pivot = v.iter().position(|&x| x != 0).unwrap();
        let inv = invm(v[pivot], p).unwrap();
        for x in v.iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for c in comb.iter_mut() {
            *c = mulm(*c, inv, p);
        }
        reduced.push((pivot, v, comb));
        pow = big.mul(&pow, w);
    }
    // the power basis of F_(p^L) over F_p cannot be free past degree L,
    // and a trace element's degree divides e; reaching here means the
    // dependency sits beyond `expected`
    None
}

/// The multiplicity pattern of an intersection, sorted: used by tests.
pub fn multiplicity_pattern(ix: &Intersection) -> Vec<u32> {
    let mut v: Vec<u32> = ix.points.iter().map(|pt| pt.multiplicity).collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::form::random_form;

    fn form(p: u64, terms: &[([u32; 3], u64)]) -> HomogeneousForm {
        let degree = terms[0].0.iter().sum();
        HomogeneousForm::from_coeffs(p, degree, terms.iter().copied()).unwrap()
    }

    #[test]
    fn two_random_lines_meet_once() {
        let p = 10007;
        let f = random_form(p, 1, 50);
        let g = random_form(p, 1, 51);
        let ix = intersect_plane_curves(&f, &g, 0, 32).unwrap();
        assert_eq!(ix.points.len(), 1);
        assert_eq!(ix.points[0].multiplicity, 1);
        assert_eq!(ix.field.ext_degree(), 1);
    }

    #[test]
    fn coordinate_lines_meet_at_origin_point() {
        let p = 10007;
        let f = form(p, &[([1, 0, 0], 1)]);
        let g = form(p, &[([0, 1, 0], 1)]);
        let ix = intersect_plane_curves(&f, &g, 0, 32).unwrap();
        assert_eq!(ix.points.len(), 1);
        let pt = &ix.points[0];
        assert!(pt.coords[0].is_zero());
        assert!(pt.coords[1].is_zero());
        assert_eq!(pt.coords[2], ix.field.one());
    }

    #[test]
    fn common_component_detected() {
        let p = 10007;
        let f = random_form(p, 3, 60);
        let lin = random_form(p, 1, 61);
        let g = f.mul(&lin);
        assert!(matches!(
            intersect_plane_curves(&f, &g, 0, 32),
            Err(NodeLabError::CommonComponent)
        ));
    }

    #[test]
    fn conic_pair_bezout_four() {
        let p = 10007;
        let f = random_form(p, 2, 70);
        let g = random_form(p, 2, 71);
        let ix = intersect_plane_curves(&f, &g, 0, 32).unwrap();
        assert_eq!(ix.total_multiplicity(), 4);
        // points really lie on both curves
        for pt in &ix.points {
            assert!(f.eval_ext(&ix.field, &pt.coords).is_zero());
            assert!(g.eval_ext(&ix.field, &pt.coords).is_zero());
        }
    }

    #[test]
    fn tangent_conics_carry_multiplicity() {
        let p = 10007;
        // x^2 = yz and x^2 = 2 yz differ by a multiple of yz: they meet only
        // at [0:0:1] and [0:1:0], tangentially at both
        let f = form(p, &[([2, 0, 0], 1), ([0, 1, 1], p - 1)]);
        let g = form(p, &[([2, 0, 0], 1), ([0, 1, 1], p - 2)]);
        let ix = intersect_plane_curves(&f, &g, 3, 64).unwrap();
        assert_eq!(ix.total_multiplicity(), 4);
        assert_eq!(multiplicity_pattern(&ix), vec![2, 2]);
        // a sharper tangency: x^2 = yz against x^2 + y^2 = yz meets only at
        // [0:0:1], with the full multiplicity 4
        let h = form(
            p,
            &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 1, 1], p - 1)],
        );
        let ix = intersect_plane_curves(&f, &h, 3, 64).unwrap();
        assert_eq!(ix.total_multiplicity(), 4);
        assert_eq!(multiplicity_pattern(&ix), vec![4]);
        assert!(ix.points[0].coords[0].is_zero());
        assert!(ix.points[0].coords[1].is_zero());
    }

    #[test]
    fn two_random_quartics_give_sixteen_simple_points() {
        let p = 10007;
        let f = random_form(p, 4, 80);
        let g = random_form(p, 4, 81);
        let ix = intersect_plane_curves(&f, &g, 0, 32).unwrap();
        assert_eq!(ix.points.len(), 16);
        assert!(ix.points.iter().all(|pt| pt.multiplicity == 1));
        for pt in &ix.points {
            assert!(f.eval_ext(&ix.field, &pt.coords).is_zero());
            assert!(g.eval_ext(&ix.field, &pt.coords).is_zero());
        }
    }

    #[test]
    fn zero_retry_budget_is_exhausted() {
        let p = 10007;
        let f = random_form(p, 2, 95);
        let g = random_form(p, 2, 96);
        assert!(matches!(
            intersect_plane_curves(&f, &g, 0, 0),
            Err(NodeLabError::RetryBudget(0))
        ));
    }

    #[test]
    fn deterministic_in_seed() {
        let p = 10007;
        let f = random_form(p, 3, 90);
        let g = random_form(p, 2, 91);
        let a = intersect_plane_curves(&f, &g, 7, 32).unwrap();
        let b = intersect_plane_curves(&f, &g, 7, 32).unwrap();
        assert_eq!(a.points, b.points);
        assert_eq!(a.field.modulus(), b.field.modulus());
    }
}
