//! Identities in the split-graded algebras and their involution-fixed parts.

use super::{kron, sign, taylor, Case, Ctx, Setting, HALF};
use crate::element::Element;
use crate::families::{Family, FamilyKind};
use crate::probes::generators::{designated_generators, generated_subalgebra};
use crate::probes::ideal::ideal_closure;
use crate::probes::{Subspace, Window};
use crate::scalar::{binomial, frac, int, HalfInt};

const S11: Setting = Setting::Split { k1: 1, k2: 1 };
const S22: Setting = Setting::Split { k1: 2, k2: 2 };
/// Smallest setting with `k > 2` and a second block of size at least 2.
const S12: Setting = Setting::Split { k1: 1, k2: 2 };
/// Both blocks of size 4, so the symplectic involution has half-sizes 2.
const S44: Setting = Setting::Split { k1: 4, k2: 4 };
const EXP: std::ops::RangeInclusive<i64> = 0..=3;
const ELLS: [i64; 2] = [0, 1];
const SIGNS: [i64; 2] = [1, -1];

fn case(tag: &'static str, anchor: &'static str, setting: Setting, run: fn(&Ctx)) -> Case {
    Case { tag, anchor, setting, reading: None, run }
}

fn corrected(tag: &'static str, anchor: &'static str, setting: Setting, reading: &'static str, run: fn(&Ctx)) -> Case {
    Case { tag, anchor, setting, reading: Some(reading), run }
}

/// Weighted mode `eps/2`.
fn half(eps: i64) -> HalfInt {
    HalfInt::from_doubled(eps)
}

/// Odd units `E_{p,k1+q}` in `[0,1]` and `E_{k1+q,p}` in `[1,0]` with swapped exponents.
fn odd_pair(c: &Ctx, p: u16, q: u16, m: i64, n: i64) -> Element {
    let k1 = c.k1();
    c.b01(p, k1 + q, m, n) + c.b10(k1 + q, p, n, m)
}

/// Odd orientations: `(p, q, i, j)` for `E_{p,k1+q}` in `[0,1]` and `E_{k1+q,p}` in `[1,0]`.
fn orientations(c: &Ctx, p: u16, q: u16) -> [(u16, u16, u8, u8); 2] {
    let k1 = c.k1();
    [(p, k1 + q, 0, 1), (k1 + q, p, 1, 0)]
}

fn super_family(c: &Ctx, l: i64) -> Option<Family> {
    c.family(FamilyKind::SuperMatrix { ell: l as u32 })
}

/// The subalgebra generated by the designated generators, up to weight `top`.
fn generated(c: &Ctx, f: &Family, top: i64) -> Option<Subspace> {
    let window = Window::new(f.min_weight(), HalfInt::from(top));
    let built = designated_generators(f).and_then(|(_, gens)| generated_subalgebra(f, &gens, window));
    match built {
        Ok(g) => Some(g.subspace),
        Err(err) => {
            c.fail(format!("generated subalgebra: {err}"));
            None
        }
    }
}

/// The ideal generated by any low basis element contains an odd unit.
fn odd_unit_in_ideal(c: &Ctx) {
    for l in ELLS {
        let Some(f) = super_family(c, l) else { return };
        let lo = f.min_weight();
        let hi = HalfInt::from_doubled(lo.doubled + 2);
        let odd_units: Vec<Element> = f
            .weights_between(lo, hi)
            .into_iter()
            .flat_map(|w| f.basis_at(w))
            .filter(|e| e.terms().keys().all(|key| key.i != key.j))
            .collect();
        for seed in f.basis_up_to(HalfInt::from_doubled(lo.doubled + 1)) {
            let label = || format!("l={l} seed {}", seed.render());
            match ideal_closure(&f, std::slice::from_ref(&seed), Window::new(lo, hi)) {
                Ok(cl) => c.check_any_in(label, &cl.subspace, &odd_units),
                Err(err) => c.fail(format!("{}: {err}", label())),
            }
        }
    }
}

fn second_block_generated(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        let Some(f) = super_family(c, l) else { return };
        let Some(sub) = generated(c, &f, 7) else { return };
        for q1 in c.idx2() {
            for q2 in c.idx2() {
                for m in EXP {
                    for n in l..=3 {
                        let e = c.b11(k1 + q1, k1 + q2, m, n);
                        c.check_in(|| format!("l={l} q=({q1},{q2}) m={m} n={n}"), &sub, &e);
                    }
                }
            }
        }
    }
}

/// Members of the subalgebra generated at `l = 0` and weight 2.
fn low_generated(c: &Ctx, members: fn(&Ctx) -> Vec<Element>) {
    let Some(f) = super_family(c, 0) else { return };
    let Some(sub) = generated(c, &f, 2) else { return };
    for e in members(c) {
        c.check_in(|| e.render(), &sub, &e);
    }
}

fn even_eigen(c: &Ctx) {
    for l in ELLS {
        for r1 in c.idx() {
            for p1 in c.idx() {
                for p2 in c.idx2() {
                    for (p, q, i, j) in orientations(c, p1, p2) {
                        for m in l..=3 {
                            for n1 in EXP {
                                for n2 in l..=3 {
                                    let v = c.unit(i, j, p, q, n1, n2);
                                    let lhs = c.md(&c.b00(r1, r1, 0, m), 0, &v);
                                    let k = int(kron(r1, p) * kron(i, 0) * (n1 + 1)) * binomial(-n1 - 2, m)
                                        + int(kron(r1, q) * kron(j, 0) * (n2 + 1)) * binomial(n2, m);
                                    c.check(|| format!("l={l} r1={r1} E[{p},{q}]{{{i},{j}}} m={m} n=({n1},{n2})"), lhs, k * v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

fn odd_block_eigen(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for r2 in c.idx2() {
            for p1 in c.idx() {
                for p2 in c.idx2() {
                    for (p, q, i, j) in orientations(c, p1, p2) {
                        for m in l..=3 {
                            for n1 in EXP {
                                for n2 in l..=3 {
                                    let v = c.unit(i, j, p, q, n1, n2);
                                    let lhs = c.md(&c.b11(k1 + r2, k1 + r2, 0, m), 0, &v);
                                    let k = int(kron(k1 + r2, p) * kron(i, 1)) * binomial(-n1 - 1, m)
                                        - int(kron(k1 + r2, q) * kron(j, 1)) * binomial(n2, m);
                                    c.check(|| format!("l={l} r2={r2} E[{p},{q}]{{{i},{j}}} m={m} n=({n1},{n2})"), lhs, k * v);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// The four delta patterns `(left, right)` for `delta_{r,p} delta_{i,*}` and `delta_{r,q} delta_{j,*}`.
const DELTAS: [(i64, i64); 3] = [(1, 0), (0, 1), (1, 1)];

fn even_taylor(c: &Ctx) {
    for (dl, dr) in DELTAS {
        for m in EXP {
            for n1 in EXP {
                for n2 in EXP {
                    let lhs = int(dl * (n1 + 1)) * binomial(-n1 - 2, m) + int(dr * (n2 + 1)) * binomial(n2, m);
                    let rhs = int(dr) * taylor(n2 + 1, m + 1, m) - int(dl) * taylor(-n1 - 1, m + 1, m);
                    c.check_scalar(|| format!("d=({dl},{dr}) m={m} n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

fn odd_block_taylor(c: &Ctx) {
    for (dl, dr) in DELTAS {
        for m in EXP {
            for n1 in EXP {
                for n2 in EXP {
                    let lhs = int(dl) * binomial(-n1 - 1, m) - int(dr) * binomial(n2, m);
                    let rhs = int(dl) * taylor(-n1 - 1, m, m) - int(dr) * taylor(n2, m, m);
                    c.check_scalar(|| format!("d=({dl},{dr}) m={m} n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

fn odd_to_even(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for p in c.idx() {
            for q in c.idx2() {
                for n1 in EXP {
                    for n2 in l..=3 {
                        let lhs = c.md(&c.b10(k1 + q, p, 0, l), -HALF, &c.b01(p, k1 + q, n1, n2));
                        let rhs = binomial(n2, l) * c.b00(p, p, n1, n2)
                            + int(n1 + 1) * binomial(-n1 - 2, l) * c.b11(k1 + q, k1 + q, n1 + 1, n2);
                        c.check(|| format!("l={l} p={p} q={q} n=({n1},{n2})"), lhs, rhs);
                    }
                }
            }
        }
    }
}

fn generators_first_block(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for p1 in c.idx() {
            for p2 in c.idx() {
                let lhs = c.md(&c.b01(p1, k1 + 1, 0, l), -HALF, &c.b10(k1 + 1, p2, 0, l));
                let rhs = int(sign(l)) * c.b00(p1, p2, 0, l)
                    - int((l + 1) * (l + 1) * kron(p1, p2)) * c.b11(k1 + 1, k1 + 1, 0, l + 1);
                c.check(|| format!("l={l} p1={p1} p2={p2}"), lhs, rhs);
            }
        }
    }
}

fn generators_second_block_low(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for q1 in c.idx2() {
            for q2 in c.idx2() {
                let lhs = c.md(&c.b01(1, k1 + q2, 0, l), HALF, &c.b10(k1 + q1, 1, 0, l));
                c.check(|| format!("l={l} q1={q1} q2={q2}"), lhs, int(-(l + 1)) * c.b11(k1 + q1, k1 + q2, 0, l));
            }
        }
    }
}

fn generators_second_block_high(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for q1 in c.idx2() {
            for q2 in c.idx2() {
                let lhs = c.md(&c.b01(1, k1 + q2, 0, l), -HALF, &c.b10(k1 + q1, 1, 0, l));
                let rhs = int(sign(l) * kron(q1, q2)) * c.b00(1, 1, 0, l)
                    - int((l + 1) * (l + 1)) * c.b11(k1 + q1, k1 + q2, 0, l + 1);
                c.check(|| format!("l={l} q1={q1} q2={q2}"), lhs, rhs);
            }
        }
    }
}

fn second_block_spread(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for q1 in c.idx2() {
            for q2 in c.idx2() {
                for m in EXP {
                    for n in l..=3 {
                        let lhs = c.md(&c.b10(k1 + q1, 1, 0, l), HALF, &c.b01(1, k1 + q2, m, n));
                        let rhs = int(m + 1) * binomial(-m - 2, l) * c.b11(k1 + q1, k1 + q2, m, n)
                            + int(kron(q1, q2)) * binomial(n - 1, l) * c.b00(1, 1, m, n - 1);
                        c.check(|| format!("l={l} q1={q1} q2={q2} m={m} n={n}"), lhs, rhs);
                    }
                }
            }
        }
    }
}

fn second_block_trace(c: &Ctx) {
    let k1 = c.k1();
    let lhs = c.md(&c.b11(k1 + 1, k1 + 2, 0, 1), 0, &c.b11(k1 + 2, k1 + 1, 0, 1));
    let rhs = -(c.b11(k1 + 1, k1 + 1, 0, 1) + c.b11(k1 + 2, k1 + 2, 0, 1));
    c.check(|| "k2=2".into(), lhs, rhs);
}

fn odd_from_second_block(c: &Ctx, right: bool) {
    let k1 = c.k1();
    for l in ELLS {
        for p in c.idx() {
            for q in c.idx2() {
                for m in EXP {
                    for n in l..=3 {
                        let v = c.b11(k1 + q, k1 + q, m, n);
                        let (lhs, rhs) = if right {
                            (
                                c.md(&c.b10(k1 + q, p, 0, l), -HALF, &v),
                                -binomial(n, l) * c.b10(k1 + q, p, m, n),
                            )
                        } else {
                            (
                                c.md(&c.b01(p, k1 + q, 0, l), -HALF, &v),
                                binomial(-m - 1, l) * c.b01(p, k1 + q, m, n),
                            )
                        };
                        c.check(|| format!("l={l} p={p} q={q} m={m} n={n}"), lhs, rhs);
                    }
                }
            }
        }
    }
}

fn first_block_spread(c: &Ctx) {
    let k1 = c.k1();
    for l in ELLS {
        for p1 in c.idx() {
            for p2 in c.idx() {
                for m in EXP {
                    for n in l..=3 {
                        let lhs = c.md(&c.b10(k1 + 1, p2, 0, l), -HALF, &c.b01(p1, k1 + 1, m, n));
                        let rhs = binomial(n, l) * c.b00(p1, p2, m, n)
                            + int((m + 1) * kron(p1, p2)) * binomial(-m - 2, l) * c.b11(k1 + 1, k1 + 1, m + 1, n);
                        c.check(|| format!("l={l} p1={p1} p2={p2} m={m} n={n}"), lhs, rhs);
                    }
                }
            }
        }
    }
}

fn smallest_raise(c: &Ctx) {
    for l in ELLS {
        let lhs = c.md(&c.b00(1, 1, 0, l), -1, &c.b10(2, 1, 0, l));
        c.check(|| format!("l={l}"), lhs, int((l + 1) * (l + 1)) * c.b10(2, 1, 0, l + 1));
    }
}

fn smallest_return(c: &Ctx) {
    for l in ELLS {
        let inner = c.md(&c.b01(1, 2, 0, l), -HALF, &c.b10(2, 1, 0, l + 1));
        let step = int(sign(l)) * c.b00(1, 1, 0, l + 1)
            - frac((l + 2) * (l + 2) * (l + 1), 2) * c.b11(2, 2, 0, l + 2);
        c.check(|| format!("l={l} inner"), inner.clone(), step);
        let lhs = c.md(&c.b00(1, 1, 0, l), 0, &inner);
        let k = sign(l) * (l + 1) * (sign(l) + l + 2);
        c.check(|| format!("l={l} full"), lhs, k * c.b00(1, 1, 0, l + 1));
    }
}

fn fixed_even_eigen(c: &Ctx) {
    for r1 in c.idx() {
        for p in c.idx() {
            for q in c.idx2() {
                for m in EXP {
                    for n1 in EXP {
                        for n2 in EXP {
                            let v = odd_pair(c, p, q, n1, n2);
                            let lhs = c.md(&(c.b00(r1, r1, 0, m) + c.b00(r1, r1, m, 0)), 0, &v);
                            let k = int(kron(r1, p) * (n1 + 1)) * (binomial(-n1 - 2, m) + binomial(n1, m));
                            c.check(|| format!("r1={r1} p={p} q={q} m={m} n=({n1},{n2})"), lhs, k * v);
                        }
                    }
                }
            }
        }
    }
}

fn fixed_odd_block_eigen(c: &Ctx) {
    let k1 = c.k1();
    for r2 in c.idx2() {
        for p in c.idx() {
            for q in c.idx2() {
                for m in EXP {
                    for n1 in EXP {
                        for n2 in EXP {
                            let v = odd_pair(c, p, q, n1, n2);
                            let actor = c.b11(k1 + r2, k1 + r2, 0, m) - c.b11(k1 + r2, k1 + r2, m, 0);
                            let lhs = c.md(&actor, 0, &v);
                            let k = int(kron(r2, q)) * (binomial(-n2 - 1, m) - binomial(n2, m));
                            c.check(|| format!("r2={r2} p={p} q={q} m={m} n=({n1},{n2})"), lhs, k * v);
                        }
                    }
                }
            }
        }
    }
}

fn fixed_odd_square(c: &Ctx) {
    let k1 = c.k1();
    for p in c.idx() {
        for q in c.idx2() {
            let g = odd_pair(c, p, q, 0, 0);
            for n1 in EXP {
                for n2 in EXP {
                    let lhs = c.md(&g, -HALF, &odd_pair(c, p, q, n1, n2));
                    let rhs = int(n1 + 1) * (c.b11(k1 + q, k1 + q, n1 + 1, n2) - c.b11(k1 + q, k1 + q, n2, n1 + 1))
                        + c.b00(p, p, n1, n2)
                        + c.b00(p, p, n2, n1);
                    c.check(|| format!("p={p} q={q} n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

fn fixed_even_taylor(c: &Ctx) {
    for m in EXP {
        for n1 in EXP {
            let lhs = int(n1 + 1) * (binomial(-n1 - 2, m) + binomial(n1, m));
            let rhs = taylor(n1 + 1, m + 1, m) - taylor(-n1 - 1, m + 1, m);
            c.check_scalar(|| format!("m={m} n1={n1}"), lhs, rhs);
        }
    }
}

fn fixed_odd_block_taylor(c: &Ctx) {
    for m in EXP {
        for n2 in EXP {
            let lhs = binomial(-n2 - 1, m) - binomial(n2, m);
            let rhs = taylor(-n2 - 1, m, m) - taylor(n2, m, m);
            c.check_scalar(|| format!("m={m} n2={n2}"), lhs, rhs);
        }
    }
}

fn fixed_odd_products(c: &Ctx) {
    let k1 = c.k1();
    for eps in SIGNS {
        let (s, t) = ((1 - eps) / 2, (eps + 1) / 2);
        for p1 in c.idx() {
            for p2 in c.idx2() {
                let g = odd_pair(c, p1, p2, 0, 0);
                for q1 in c.idx() {
                    for q2 in c.idx2() {
                        for m in EXP {
                            for n in EXP {
                                let lhs = c.md(&g, half(eps), &odd_pair(c, q1, q2, m, n));
                                let rhs = int(kron(p1, q1) * (m + 1))
                                    * (c.b11(k1 + p2, k1 + q2, m + s, n) - c.b11(k1 + q2, k1 + p2, n, m + s))
                                    + int(kron(p2, q2)) * (c.b00(q1, p1, m, n - t) + c.b00(p1, q1, n - t, m));
                                c.check(|| format!("eps={eps} p=({p1},{p2}) q=({q1},{q2}) m={m} n={n}"), lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }
}

fn fixed_odd_on_even(c: &Ctx) {
    for p1 in c.idx() {
        for p2 in c.idx2() {
            let g = odd_pair(c, p1, p2, 0, 0);
            for m in EXP {
                for n in EXP {
                    let lhs = c.md(&g, HALF, &(c.b00(p1, p1, m, n) + c.b00(p1, p1, n, m)));
                    let rhs = int(n + 1) * odd_pair(c, p1, p2, m, n) + int(m + 1) * odd_pair(c, p1, p2, n, m);
                    c.check(|| format!("p=({p1},{p2}) m={m} n={n}"), lhs, rhs);
                }
            }
        }
    }
}

fn fixed_odd_on_block(c: &Ctx) {
    let k1 = c.k1();
    for eps in SIGNS {
        let t = (1 + eps) / 2;
        for p1 in c.idx() {
            for p2 in c.idx2() {
                let g = odd_pair(c, p1, p2, 0, 0);
                let r = k1 + p2;
                for m in EXP {
                    for n in EXP {
                        let lhs = c.md(&g, half(eps), &(c.b11(r, r, m, n) - c.b11(r, r, n, m)));
                        let rhs = c.b01(p1, r, m - t, n) + c.b10(r, p1, n, m - t)
                            - c.b01(p1, r, n - t, m)
                            - c.b10(r, p1, m, n - t);
                        c.check(|| format!("eps={eps} p=({p1},{p2}) m={m} n={n}"), lhs, rhs);
                    }
                }
            }
        }
    }
}

fn fixed_second_block_square(c: &Ctx) {
    let k1 = c.k1();
    let y = c.b11(k1 + 1, k1 + 2, 1, 0) - c.b11(k1 + 2, k1 + 1, 0, 1);
    let lhs = c.md(&y, 0, &y);
    let rhs = 2 * (c.b11(k1 + 2, k1 + 2, 1, 0) - c.b11(k1 + 2, k1 + 2, 0, 1));
    c.check(|| "k2=2".into(), lhs, rhs);
}

/// The four odd shapes fixed by the symplectic involution, with half-sizes `l1 = k1/2`, `l2 = k2/2`.
#[derive(Clone, Copy, Debug)]
enum Shape {
    /// `(E_{p1,k1+p2})_{[0,1]}(n1,n2) + (E_{k1+l2+p2,l1+p1})_{[1,0]}(n2,n1)`
    A,
    /// `(E_{p1,k1+l2+p2})_{[0,1]}(n1,n2) - (E_{k1+p2,l1+p1})_{[1,0]}(n2,n1)`
    B,
    /// `(E_{l1+p1,k1+p2})_{[0,1]}(n1,n2) - (E_{k1+l2+p2,p1})_{[1,0]}(n2,n1)`
    C,
    /// `(E_{l1+p1,k1+l2+p2})_{[0,1]}(n1,n2) + (E_{k1+p2,p1})_{[1,0]}(n2,n1)`
    D,
}

fn halves(c: &Ctx) -> (u16, u16, u16) {
    (c.k1(), c.k1() / 2, c.k2() / 2)
}

fn shape(c: &Ctx, s: Shape, p1: u16, p2: u16, n1: i64, n2: i64) -> Element {
    let (k1, l1, l2) = halves(c);
    match s {
        Shape::A => c.b01(p1, k1 + p2, n1, n2) + c.b10(k1 + l2 + p2, l1 + p1, n2, n1),
        Shape::B => c.b01(p1, k1 + l2 + p2, n1, n2) - c.b10(k1 + p2, l1 + p1, n2, n1),
        Shape::C => c.b01(l1 + p1, k1 + p2, n1, n2) - c.b10(k1 + l2 + p2, p1, n2, n1),
        Shape::D => c.b01(l1 + p1, k1 + l2 + p2, n1, n2) + c.b10(k1 + p2, p1, n2, n1),
    }
}

fn sigma_even_eigen(c: &Ctx, s: Shape) {
    let (_, l1, _) = halves(c);
    for r1 in c.idx().filter(|&r| r <= l1) {
        for p1 in c.idx().filter(|&p| p <= l1) {
            for p2 in c.idx2() {
                for m in EXP {
                    for n1 in EXP {
                        for n2 in EXP {
                            let v = shape(c, s, p1, p2, n1, n2);
                            let actor = c.b00(r1, r1, 0, m) + c.b00(l1 + r1, l1 + r1, m, 0);
                            let lhs = c.md(&actor, 0, &v);
                            let b = match s {
                                Shape::A | Shape::B => binomial(-n1 - 2, m),
                                Shape::C | Shape::D => binomial(n1, m),
                            };
                            let k = int(kron(r1, p1) * (n1 + 1)) * b;
                            c.check(|| format!("{s:?} r1={r1} p=({p1},{p2}) m={m} n=({n1},{n2})"), lhs, k * v);
                        }
                    }
                }
            }
        }
    }
}

fn sigma_odd_block_eigen(c: &Ctx, s: Shape) {
    let (k1, l1, l2) = halves(c);
    for r2 in c.idx2().filter(|&r| r <= l2) {
        for p1 in c.idx().filter(|&p| p <= l1) {
            for p2 in c.idx2().filter(|&p| p <= l2) {
                for m in EXP {
                    for n1 in EXP {
                        for n2 in EXP {
                            let v = shape(c, s, p1, p2, n1, n2);
                            let actor = c.b11(k1 + r2, k1 + r2, 0, m) - c.b11(k1 + l2 + r2, k1 + l2 + r2, m, 0);
                            let lhs = c.md(&actor, 0, &v);
                            let b = match s {
                                Shape::A | Shape::C => -binomial(n2, m),
                                Shape::B | Shape::D => binomial(-n2 - 1, m),
                            };
                            let k = int(kron(r2, p2)) * b;
                            c.check(|| format!("{s:?} r2={r2} p=({p1},{p2}) m={m} n=({n1},{n2})"), lhs, k * v);
                        }
                    }
                }
            }
        }
    }
}

fn sigma_on_even(c: &Ctx, s: Shape) {
    let (_, l1, _) = halves(c);
    for p1 in c.idx() {
        for p2 in c.idx2() {
            let g = shape(c, s, p1, p2, 0, 0);
            for n1 in EXP {
                for n2 in EXP {
                    let v = c.b00(p1, p1, n1, n2) + c.b00(l1 + p1, l1 + p1, n2, n1);
                    let lhs = c.md(&g, HALF, &v);
                    let rhs = match s {
                        Shape::A | Shape::B => int(n2 + 1) * shape(c, s, p1, p2, n1, n2),
                        Shape::C | Shape::D => int(n1 + 1) * shape(c, s, p1, p2, n2, n1),
                    };
                    c.check(|| format!("{s:?} p=({p1},{p2}) n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

fn sigma_on_block(c: &Ctx, s: Shape) {
    let (k1, _, l2) = halves(c);
    for p1 in c.idx() {
        for p2 in c.idx2() {
            let g = shape(c, s, p1, p2, 0, 0);
            for n1 in EXP {
                for n2 in EXP {
                    let v = c.b11(k1 + p2, k1 + p2, n1, n2) - c.b11(k1 + l2 + p2, k1 + l2 + p2, n2, n1);
                    let lhs = c.md(&g, -HALF, &v);
                    let rhs = match s {
                        Shape::A | Shape::C => shape(c, s, p1, p2, n1, n2),
                        Shape::B | Shape::D => -shape(c, s, p1, p2, n2, n1),
                    };
                    c.check(|| format!("{s:?} p=({p1},{p2}) n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

/// Runs `body(p1, p2, q1, q2, n1, n2)` over the index ranges of the symplectic cases.
fn sigma_pairs(c: &Ctx, mut body: impl FnMut(u16, u16, u16, u16, i64, i64)) {
    for p1 in c.idx() {
        for p2 in c.idx2() {
            for q1 in c.idx() {
                for q2 in c.idx2() {
                    for n1 in EXP {
                        for n2 in EXP {
                            body(p1, p2, q1, q2, n1, n2);
                        }
                    }
                }
            }
        }
    }
}

fn sigma_a_on_d(c: &Ctx) {
    let (k1, l1, l2) = halves(c);
    for eps in SIGNS {
        let (s, t) = ((1 - eps) / 2, (eps + 1) / 2);
        sigma_pairs(c, |p1, p2, q1, q2, n1, n2| {
            let lhs = c.md(&shape(c, Shape::A, p1, p2, 0, 0), half(eps), &shape(c, Shape::D, q1, q2, n1, n2));
            let rhs = int(kron(p2, q2)) * (c.b00(p1, q1, n2 - t, n1) + c.b00(l1 + q1, l1 + p1, n1, n2 - t))
                - int(kron(p1, q1) * (n1 + 1))
                    * (c.b11(k1 + q2, k1 + p2, n2, n1 + s) - c.b11(k1 + l2 + p2, k1 + l2 + q2, n1 + s, n2));
            c.check(|| format!("eps={eps} p=({p1},{p2}) q=({q1},{q2}) n=({n1},{n2})"), lhs, rhs);
        });
    }
}

fn sigma_a_on_b(c: &Ctx) {
    let (_, l1, _) = halves(c);
    sigma_pairs(c, |p1, p2, q1, q2, n1, n2| {
        let lhs = c.md(&shape(c, Shape::A, p1, p2, 0, 0), -HALF, &shape(c, Shape::B, q1, q2, n1, n2));
        let rhs = int(-kron(p2, q2)) * (c.b00(p1, l1 + q1, n2, n1) - c.b00(q1, l1 + p1, n1, n2));
        c.check(|| format!("p=({p1},{p2}) q=({q1},{q2}) n=({n1},{n2})"), lhs, rhs);
    });
}

fn sigma_a_on_c(c: &Ctx) {
    let (k1, _, l2) = halves(c);
    sigma_pairs(c, |p1, p2, q1, q2, n1, n2| {
        let lhs = c.md(&shape(c, Shape::A, p1, p2, 0, 0), HALF, &shape(c, Shape::C, q1, q2, n1, n2));
        let rhs = int(kron(p1, q1) * (n1 + 1))
            * (c.b11(k1 + l2 + p2, k1 + q2, n1, n2) + c.b11(k1 + l2 + q2, k1 + p2, n2, n1));
        c.check(|| format!("p=({p1},{p2}) q=({q1},{q2}) n=({n1},{n2})"), lhs, rhs);
    });
}

fn sigma_d_on_a(c: &Ctx) {
    let (k1, l1, l2) = halves(c);
    for eps in SIGNS {
        let (s, t) = ((1 - eps) / 2, (eps + 1) / 2);
        sigma_pairs(c, |p1, p2, q1, q2, n1, n2| {
            let lhs = c.md(&shape(c, Shape::D, p1, p2, 0, 0), half(eps), &shape(c, Shape::A, q1, q2, n1, n2));
            let rhs = int(kron(p2, q2)) * (c.b00(q1, p1, n1, n2 - t) + c.b00(l1 + p1, l1 + q1, n2 - t, n1))
                + int(kron(p1, q1) * (n1 + 1))
                    * (c.b11(k1 + p2, k1 + q2, n1 + s, n2) - c.b11(k1 + l2 + q2, k1 + l2 + p2, n2, n1 + s));
            c.check(|| format!("eps={eps} p=({p1},{p2}) q=({q1},{q2}) n=({n1},{n2})"), lhs, rhs);
        });
    }
}

fn sigma_d_on_b(c: &Ctx) {
    let (k1, _, l2) = halves(c);
    sigma_pairs(c, |p1, p2, q1, q2, n1, n2| {
        let lhs = c.md(&shape(c, Shape::D, p1, p2, 0, 0), HALF, &shape(c, Shape::B, q1, q2, n1, n2));
        let rhs = int(kron(p1, q1) * (n1 + 1))
            * (c.b11(k1 + p2, k1 + l2 + q2, n1, n2) + c.b11(k1 + q2, k1 + l2 + p2, n2, n1));
        c.check(|| format!("p=({p1},{p2}) q=({q1},{q2}) n=({n1},{n2})"), lhs, rhs);
    });
}

fn sigma_d_on_c(c: &Ctx) {
    let (_, l1, _) = halves(c);
    sigma_pairs(c, |p1, p2, q1, q2, n1, n2| {
        let lhs = c.md(&shape(c, Shape::D, p1, p2, 0, 0), -HALF, &shape(c, Shape::C, q1, q2, n1, n2));
        let rhs = int(kron(p2, q2)) * (c.b00(l1 + q1, p1, n1, n2) - c.b00(l1 + p1, q1, n2, n1));
        c.check(|| format!("p=({p1},{p2}) q=({q1},{q2}) n=({n1},{n2})"), lhs, rhs);
    });
}

fn sigma_second_block_square(c: &Ctx) {
    let (k1, _, l2) = halves(c);
    let u = c.b11(k1 + 1, k1 + 2, 0, 1) - c.b11(k1 + l2 + 2, k1 + l2 + 1, 1, 0);
    let v = c.b11(k1 + 2, k1 + 1, 0, 1) - c.b11(k1 + l2 + 1, k1 + l2 + 2, 1, 0);
    let lhs = c.md(&u, 0, &v);
    let rhs = -c.b11(k1 + 1, k1 + 1, 0, 1) + c.b11(k1 + l2 + 1, k1 + l2 + 1, 1, 0) - c.b11(k1 + 2, k1 + 2, 0, 1)
        + c.b11(k1 + l2 + 2, k1 + l2 + 2, 1, 0);
    c.check(|| "l2=2".into(), lhs, rhs);
}

pub(super) fn cases() -> Vec<Case> {
    vec![
        case("(4.13)", "(E_{r_1,r_1}(0,m))(0)(E_{p,q})_{[i,j]}(n_1,n_2)", S22, even_eigen),
        case("(4.14)", "[(E_{k_1+r_2,k_1+r_2})_{[1,1]}(0,m)](0)(E_{p,q})_{[i,j]}(n_1,n_2)", S22, odd_block_eigen),
        case("(4.15)", "{1\\over m!}{d^{m+1}\\over dx^{m+1}}(\\delta_{r_1,q}\\delta_{j,0}x^{n_2+1}", S22, even_taylor),
        case("(4.16)", "{1\\over m!}{d^m\\over dx^m}(\\delta_{k_1+r_2,p}\\delta_{i,1}x^{-n_1-1}", S22, odd_block_taylor),
        case("(4.17)", "(E_{p,k_1+q})_{[0,1]}(n_1,n_2)\\in{\\cal I}\\;\\mbox{or}\\;(E_{k_1+q,p})_{[1,0]}(n_1,n_2)\\in{\\cal I}", S22, odd_unit_in_ideal),
        case("(4.18)", "[(E_{k_1+q,p})_{[1,0]}(0,\\ell)](-1/2)(E_{p,k_1+q})_{[0,1]}(n_1,n_2)", S22, odd_to_even),
        case("(4.19)", "[(E_{p_1,k_1+1})_{[0,1]}(0,\\ell)](-1/2)[(E_{k_1+1,p_2})_{[1,0]}(0,\\ell)]", S22, generators_first_block),
        case("(4.20)", "[(E_{1,k_1+q_2})_{[0,1]}(0,\\ell)](1/2)[(E_{k_1+q_1,1})_{[1,0]}(0,\\ell)]", S22, generators_second_block_low),
        corrected(
            "(4.21)",
            "[(E_{1,k_1+p_2})_{[0,1]}(0,\\ell)](-1/2)[(E_{k_1+q_1,1})_{[1,0]}(0,\\ell)]",
            S22,
            "the left factor is (E_{1,k_1+q_2})_{[0,1]}(0,l), matching q_2 on the right side",
            generators_second_block_high,
        ),
        corrected("(4.30)", "[(E_{k_1+q_1,1})_{[1,0]}(0,\\ell)](1/2)(E_{1,k_1+q_2})_{[0,1]}(m,n)", S22, "the E_{1,1}(m,n-1) term carries \\delta_{q_1,q_2}", second_block_spread),
        case("(4.31)", "(E_{k_1+q_1,k_1+q_2})_{[1,1]}(m,n)\\in R'", S12, second_block_generated),
        case("(4.32)", "(E_{k_1+1,k_1+2})_{[1,1]}(0,1),(E_{k_1+2,k_1+1})_{[1,1]}(0,1)\\in R'", S12, |c| {
            low_generated(c, |c| vec![c.b11(c.k1() + 1, c.k1() + 2, 0, 1), c.b11(c.k1() + 2, c.k1() + 1, 0, 1)])
        }),
        case("(4.33)", "(E_{k_1+1,k_1+1})_{[1,1]}(0,1)+(E_{k_1+2,k_1+2})_{[1,1]}(0,1)-2E_{1,1}\\in R'", S12, |c| {
            low_generated(c, |c| {
                let k1 = c.k1();
                vec![c.b11(k1 + 1, k1 + 1, 0, 1) + c.b11(k1 + 2, k1 + 2, 0, 1) - 2 * c.b00(1, 1, 0, 0)]
            })
        }),
        case("(4.35)", "(E_{k_1+q_1,k_1+q_2})_{[1,1]}(0,1)\\in R'", S12, |c| {
            low_generated(c, |c| {
                let k1 = c.k1();
                c.idx2().flat_map(|q1| c.idx2().map(move |q2| (q1, q2))).map(|(q1, q2)| c.b11(k1 + q1, k1 + q2, 0, 1)).collect()
            })
        }),
        case("(4.34)", "[(E_{k_1+1,k_1+2})_{[1,1]}(0,1)](0)(E_{k_1+2,k_1+1})_{[1,1]}(0,1)", S22, second_block_trace),
        case("(4.36)", "[(E_{k_1+q,p})_{[1,0]}(0,\\ell)](-1/2)(E_{k_1+q,k_1+q})_{[1,1]}(m,n)", S22, |c| {
            odd_from_second_block(c, true)
        }),
        corrected(
            "(4.37)",
            "[(E_{p,k_1+q})_{[0,1]}(0,\\ell)](-1/2)(E_{k_1+q,k_1+q})_{[1,1]}(m,n)",
            S22,
            "the right side lies in block [0,1]; E_{p,k_1+q} in block [1,0] is not an element",
            |c| odd_from_second_block(c, false),
        ),
        case("(4.38)", "[(E_{k_1+1,p_2})_{[1,0]}(0,\\ell)](-1/2)(E_{p_1,k_1+1})_{[0,1]}(m,n)", S22, first_block_spread),
        case("(4.41)", "(E_{1,1}(0,\\ell))(-1)(E_{2,1})_{[1,0]}(0,\\ell)", S11, smallest_raise),
        case("(4.42)", "(E_{1,1}(0,\\ell))(0)[(E_{1,2})_{[0,1]}(0,\\ell)](-1/2)(E_{2,1})_{[1,0]}(0,\\ell+1)", S11, smallest_return),
        case("(4.47)", "(E_{r_1,r_1}(0,m)+E_{r_1,r_1}(m,0))(0)", S22, fixed_even_eigen),
        case("(4.48)", "(E_{k_1+r_2,k_1+r_2})_{[1,1]}(0,m)-(E_{k_1+r_2,k_1+r_2})_{[1,1]}(m,0))(0)", S22, fixed_odd_block_eigen),
        case("(4.49)", "[(E_{k_1+q,p})_{[1,0]}+(E_{p,k_1+q})_{[0,1]}](-1/2)", S22, fixed_odd_square),
        case("(4.50)", "{\\delta_{r_1,p}\\over m!}{d^{m+1}\\over dx^{m+1}}(x^{n_1+1}-x^{-n_1-1})", S22, fixed_even_taylor),
        case("(4.51)", "{\\delta_{r_2,q}\\over m!}{d^m\\over dx^m}(x^{-n_2-1}-x^{n_2})", S22, fixed_odd_block_taylor),
        case("(4.52)", "[(E_{p_1,k_1+p_2})_{[0,1]}+(E_{k_1+p_2,p_1})_{[1,0]}](\\epsilon/2)", S22, fixed_odd_products),
        case("(4.53)", "[(E_{p_1,k_1+p_2})_{[0,1]}+(E_{k_1+p_2,p_1})_{[1,0]}](1/2)(E_{p_1,p_1}(m,n)+E_{p_1,p_1}(n,m))", S22, fixed_odd_on_even),
        corrected("(4.54)", "[(E_{k_1+p_2,k_1+p_2})_{[1,1]}(m,n)-(E_{k_1+p_2,k_1+p_2})_{[1,1]}(n,m)]", S22, "the shifted exponents are m-(1+\\epsilon)/2 and n-(1+\\epsilon)/2, not m+(1-\\epsilon)/2 and n+(1-\\epsilon)/2", fixed_odd_on_block),
        case("(4.55)", "[(E_{k_1+1,k_1+2})_{[1,1]}(1,0)-(E_{k_1+2,k_1+1})_{[1,1]}(0,1)](0)", S22, fixed_second_block_square),
        case("(4.65)", "(E_{p_1,k_1+p_2})_{[0,1]}(n_1,n_2)+(E_{k_1+\\ell_2+p_2,\\ell_1+p_1})_{[1,0]}(n_2,n_1)]", S44, |c| sigma_even_eigen(c, Shape::A)),
        case("(4.66)", "[(E_{p_1,k_1+\\ell_2+p_2})_{[0,1]}(n_1,n_2)-(E_{k_1+p_2,\\ell_1+p_1})_{[1,0]}(n_2,n_1)]", S44, |c| sigma_even_eigen(c, Shape::B)),
        case("(4.67)", "[(E_{\\ell_1+p_1,k_1+p_2})_{[0,1]}(n_1,n_2)-(E_{k_1+\\ell_2+p_2,p_1})_{[1,0]}(n_2,n_1)]", S44, |c| sigma_even_eigen(c, Shape::C)),
        case("(4.68)", "[E_{\\ell_1+p_1,k_1+\\ell_2+p_2})_{[0,1]}(n_1,n_2)+(E_{k_1+p_2,p_1})_{[1,0]}(n_2,n_1)]", S44, |c| sigma_even_eigen(c, Shape::D)),
        case("(4.69)", "-\\delta_{r_2,p_2}(^{n_2}_m)", S44, |c| sigma_odd_block_eigen(c, Shape::A)),
        case("(4.70)", "\\delta_{r_2,p_2}(^{-n_2-1}_{\\:\\;\\;\\;m})[(E_{p_1,k_1+\\ell_2+p_2})_{[0,1]}(n_1,n_2)", S44, |c| sigma_odd_block_eigen(c, Shape::B)),
        case("(4.71)", "-\\delta_{r_2,p_2}(^{n_2}_m) [(E_{\\ell_1+p_1,k_1+p_2})_{[0,1]}(n_1,n_2)", S44, |c| sigma_odd_block_eigen(c, Shape::C)),
        case("(4.72)", "\\delta_{r_2,p_2}(^{-n_2-1}_{\\:\\;\\;\\;m})[(E_{\\ell_1+p_1,k_1+\\ell_2+p_2})_{[0,1]}(n_1,n_2)", S44, |c| sigma_odd_block_eigen(c, Shape::D)),
        case("(4.73)", "[(E_{p_1,k_1+p_2})_{[0,1]}+(E_{k_1+\\ell_2+p_2,\\ell_1+p_1})_{[1,0]}](1/2)", S44, |c| sigma_on_even(c, Shape::A)),
        case("(4.74)", "[(E_{p_1,k_1+\\ell_2+p_2})_{[0,1]}-(E_{k_1+p_2,\\ell_1+p_1})_{[1,0]}](1/2)", S44, |c| sigma_on_even(c, Shape::B)),
        case("(4.75)", "[(E_{\\ell_1+p_1,k_1+p_2})_{[0,1]}-(E_{k_1+\\ell_2+p_2,p_1})_{[1,0]}](1/2)", S44, |c| sigma_on_even(c, Shape::C)),
        case("(4.76)", "[(E_{\\ell_1+p_1,k_1+\\ell_2+p_2})_{[0,1]}+(E_{k_1+p_2,p_1})_{[1,0]}](1/2)", S44, |c| sigma_on_even(c, Shape::D)),
        case("(4.77)", "[(E_{p_1,k_1+p_2})_{[0,1]}+(E_{k_1+\\ell_2+p_2,\\ell_1+p_1})_{[1,0]}](-1/2)", S44, |c| sigma_on_block(c, Shape::A)),
        case("(4.78)", "[(E_{p_1,k_1+\\ell_2+p_2})_{[0,1]}-(E_{k_1+p_2,\\ell_1+p_1})_{[1,0]}](-1/2)", S44, |c| sigma_on_block(c, Shape::B)),
        case("(4.79)", "[(E_{\\ell_1+p_1,k_1+p_2})_{[0,1]}-(E_{k_1+\\ell_2+p_2,p_1})_{[1,0]})](-1/2)", S44, |c| sigma_on_block(c, Shape::C)),
        case("(4.80)", "[(E_{\\ell_1+p_1,k_1+\\ell_2+p_2})_{[0,1]}+(E_{k_1+p_2,p_1})_{[1,0]}](-1/2)", S44, |c| sigma_on_block(c, Shape::D)),
        case("(4.81)", "[(E_{\\ell_1+q_1,k_1+\\ell_2+q_2})_{[0,1]}(n_1,n_2)+(E_{k_1+q_2,q_1})_{[1,0]}(n_2,n_1)]", S44, sigma_a_on_d),
        corrected(
            "(4.82)",
            "[(E_{q_1,k_1+\\ell_2+q_2})_{[0,1]}(n_1,n_2)-(E_{k_1+q_2,\\ell_1+q_1})_{[1,0]}(n_2,n_1)]",
            S44,
            "the second term is E_{q_1,\\ell_1+p_1}(n_1,n_2), not E_{\\ell_1+q_1,\\ell_1+p_1}(n_1,n_2)",
            sigma_a_on_b,
        ),
        case("(4.83)", "[(E_{\\ell_1+q_1,k_1+q_2})_{[0,1]}(n_1,n_2)-(E_{k_1+\\ell_2+q_2,q_1})_{[1,0]})(n_2,n_1)]", S44, sigma_a_on_c),
        case("(4.84)", "[E_{\\ell_1+p_1,k_1+\\ell_2+p_2})_{[0,1]}+(E_{k_1+p_2,p_1})_{[1,0]}](\\epsilon/2)", S44, sigma_d_on_a),
        corrected("(4.85)", "\\delta_{p_1,q_1}(n_1+1)[(E_{k_1+p_2,k_1+\\ell_2+q_2})_{[1,1]}(n_1,n_2)", S44, "the two terms in the bracket are added, not subtracted", sigma_d_on_b),
        case("(4.86)", "\\delta_{p_2,q_2}[E_{\\ell_1+q_1,p_1}(n_1,n_2)-E_{\\ell_1+p_1,q_1}(n_2,n_1)]", S44, sigma_d_on_c),
        case("(4.87)", "[(E_{k_1+1,k_1+2})_{[1,1]}(0,1)-(E_{k_1+\\ell_2+2,k_1+\\ell_2+1})_{[1,1]}(1,0)](0)", S44, sigma_second_block_square),
    ]
}
