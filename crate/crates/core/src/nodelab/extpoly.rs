//! Univariate polynomials with extension-field coefficients: just enough
//! machinery for gcds of dehomogenized curve equations and for splitting off
//! roots inside a subfield.

use num_bigint::BigUint;
use rand_core::RngCore;

use super::field::{ExtElem, FieldContext};

pub type ExtPoly = Vec<ExtElem>;

pub fn trim(f: &mut ExtPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

pub fn deg(f: &[ExtElem]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn sub(f: &[ExtElem], g: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    let n = f.len().max(g.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = f.get(i).cloned().unwrap_or_else(|| ctx.zero());
        let b = g.get(i).cloned().unwrap_or_else(|| ctx.zero());
        out.push(ctx.sub(&a, &b));
    }
    trim(&mut out);
    out
}

pub fn mul(f: &[ExtElem], g: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![ctx.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            let t = ctx.mul(a, b);
            out[i + j] = ctx.add(&out[i + j], &t);
        }
    }
    trim(&mut out);
    out
}

pub fn make_monic(f: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    match f.last() {
        None => vec![],
        Some(lc) => {
            let inv = ctx.inv(lc).expect("nonzero leading coefficient");
            f.iter().map(|c| ctx.mul(c, &inv)).collect()
        }
    }
}

pub fn rem(f: &[ExtElem], g: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    let gd = deg(g).expect("division by zero polynomial");
    let lc_inv = ctx.inv(&g[gd]).expect("field");
    let mut r: ExtPoly = f.to_vec();
    let mut i = r.len();
    while i > gd {
        i -= 1;
        if r[i].is_zero() {
            continue;
        }
        let q = ctx.mul(&r[i], &lc_inv);
        for (j, gj) in g.iter().enumerate() {
            let t = ctx.mul(&q, gj);
            r[i - gd + j] = ctx.sub(&r[i - gd + j], &t);
        }
    }
    trim(&mut r);
    r
}

/// Monic greatest common divisor.
pub fn gcd(f: &[ExtElem], g: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, ctx);
        a = b;
        b = r;
    }
    make_monic(&a, ctx)
}

pub fn pow_mod(base: &[ExtElem], e: &BigUint, m: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    let mut acc = vec![ctx.one()];
    if e.bits() == 0 {
        return acc;
    }
    let base = rem(base, m, ctx);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, ctx), m, ctx);
        if e.bit(i) {
            acc = rem(&mul(&acc, &base, ctx), m, ctx);
        }
    }
    acc
}

/// Evaluate a polynomial with prime-field coefficients at an extension
/// element (Horner).
pub fn eval_scalar_poly(f: &[u64], x: &ExtElem, ctx: &FieldContext) -> ExtElem {
    let mut acc = ctx.zero();
    for &c in f.iter().rev() {
        acc = ctx.mul(&acc, x);
        acc = ctx.add(&acc, &ctx.scalar(c));
    }
    acc
}

/// One root of a monic polynomial over `ctx`, all of whose roots lie in the
/// field; Cantor-Zassenhaus splitting down to a linear factor. `ctx` must
/// have odd characteristic (always true here).
pub fn find_root(
    f: &[ExtElem],
    ctx: &FieldContext,
    rng: &mut impl RngCore,
) -> ExtElem {
    let mut f = make_monic(f, ctx);
    let exp = (BigUint::from(ctx.prime()).pow(ctx.ext_degree() as u32) - 1u32) / 2u32;
    while deg(&f).expect("nonzero") > 1 {
        let shift = ctx.random(rng);
        let base = vec![shift, ctx.one()];
        let b = pow_mod(&base, &exp, &f, ctx);
        let g = gcd(&sub(&b, &[ctx.one()], ctx), &f, ctx);
        if let Some(dg) = deg(&g) {
            let df = deg(&f).unwrap();
            if dg > 0 && dg < df {
                // follow the smaller half
                if dg <= df - dg {
                    f = g;
                } else {
                    f = quotient(&f, &g, ctx);
                }
            }
        }
    }
    ctx.neg(&f[0])
}

fn quotient(f: &[ExtElem], g: &[ExtElem], ctx: &FieldContext) -> ExtPoly {
    let gd = deg(g).expect("nonzero divisor");
    let lc_inv = ctx.inv(&g[gd]).expect("field");
    let mut r: ExtPoly = f.to_vec();
    let mut q = vec![ctx.zero(); f.len().saturating_sub(gd)];
    let mut i = r.len();
    while i > gd {
        i -= 1;
        if r[i].is_zero() {
            continue;
        }
        let c = ctx.mul(&r[i], &lc_inv);
        for (j, gj) in g.iter().enumerate() {
            let t = ctx.mul(&c, gj);
            r[i - gd + j] = ctx.sub(&r[i - gd + j], &t);
        }
        q[i - gd] = c;
    }
    trim(&mut q);
    q
}
