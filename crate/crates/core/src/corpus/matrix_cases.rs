//! Identities in the ungraded matrix algebras and their involution-fixed parts.

use super::{kron, sign, taylor, Case, Ctx, Setting};
use crate::element::Element;
use crate::scalar::{binomial, factorial, frac, int, Scalar};

const K2: Setting = Setting::Trivial { k: 2 };
const K1: Setting = Setting::Trivial { k: 1 };
const EXP: std::ops::RangeInclusive<i64> = 0..=3;
const ELLS: [i64; 2] = [0, 1];

fn case(tag: &'static str, anchor: &'static str, setting: Setting, run: fn(&Ctx)) -> Case {
    Case { tag, anchor, setting, reading: None, run }
}

fn corrected(tag: &'static str, anchor: &'static str, setting: Setting, reading: &'static str, run: fn(&Ctx)) -> Case {
    Case { reading: Some(reading), ..case(tag, anchor, setting, run) }
}

fn fact(n: i64) -> Scalar {
    Scalar::from_integer(factorial(n as u64))
}

fn pairs(c: &Ctx) -> Vec<(u16, u16)> {
    c.idx().flat_map(|p| c.idx().map(move |q| (p, q))).collect()
}

fn distinct_pairs(c: &Ctx) -> Vec<(u16, u16)> {
    pairs(c).into_iter().filter(|(p, q)| p != q).collect()
}

/// `u(a,b) - u(b,a)` in the `[1,1]` block.
fn skew(c: &Ctx, p: u16, q: u16, a: i64, b: i64) -> Element {
    c.b11(p, q, a, b) - c.b11(q, p, b, a)
}

/// `u(a,b) + u(b,a)` in the `[0,0]` block.
fn sym(c: &Ctx, p: u16, q: u16, a: i64, b: i64) -> Element {
    c.b00(p, q, a, b) + c.b00(q, p, b, a)
}

/// `(E_{q,q})_{[1,1]}(1,0) - (E_{q,q})_{[1,1]}(0,1)`.
fn lift(c: &Ctx, q: u16) -> Element {
    skew(c, q, q, 1, 0)
}

fn eigen_diag(c: &Ctx) {
    for l in ELLS {
        for r in c.idx() {
            for (p, q) in pairs(c) {
                for m in l..=3 {
                    for n1 in EXP {
                        for n2 in l..=3 {
                            let v = c.b00(p, q, n1, n2);
                            let lhs = c.md(&c.b00(r, r, 0, m), 0, &v);
                            let k = int(kron(r, p) * (n1 + 1)) * binomial(-n1 - 2, m)
                                + int(kron(r, q) * (n2 + 1)) * binomial(n2, m);
                            c.check(|| format!("l={l} r={r} p={p} q={q} m={m} n=({n1},{n2})"), lhs, k * v);
                        }
                    }
                }
            }
        }
    }
}

fn reduce_to_diag(c: &Ctx) {
    for l in ELLS {
        for j in [0, 2].into_iter().filter(|&j| j >= l) {
            for (p, q) in pairs(c) {
                for m in EXP {
                    for n in l..=3 {
                        let label = || format!("l={l} j={j} p={p} q={q} m={m} n={n}");
                        let inner = c.md(&c.b00(q, p, 0, j), m, &c.b00(p, q, m, n));
                        let step = int(m + 1) * binomial(-m - 2, j) * c.b00(q, q, 0, n)
                            + int(n + 1) * binomial(n - m, j) * c.b00(p, p, m, n - m);
                        c.check(|| format!("{} inner", label()), inner.clone(), step);
                        let lhs = c.md(&c.b00(q, q, 0, j), n - l, &inner);
                        let k = int(m + 1)
                            * binomial(-m - 2, j)
                            * (binomial(-2, j) * int(kron(n, l)) + int(n + 1) * binomial(l, j))
                            + int(kron(p, q) * (n + 1))
                                * binomial(n - m, j)
                                * (int((m + 1) * kron(n, m + l)) * binomial(-m - 2, j)
                                    + int((n + 1) * kron(m, 0)) * binomial(l, j));
                        c.check(label, lhs, k * c.b00(q, q, 0, l));
                    }
                }
            }
        }
    }
}

fn transfer_diag(c: &Ctx) {
    for l in ELLS {
        let j = 2;
        for (q, r) in distinct_pairs(c) {
            let label = |s: &str| format!("l={l} j={j} q={q} r={r} {s}");
            let s1 = c.md(&c.b00(q, r, 0, l), 0, &c.b00(q, q, 0, l));
            c.check(|| label("first"), s1.clone(), int(l + 1) * c.b00(q, r, 0, l));
            let s2 = c.md(&c.b00(r, q, 0, j), 0, &c.b00(q, r, 0, l));
            c.check(|| label("second"), s2, int(j + 1) * c.b00(r, r, 0, l));
            let lhs = c.md(&c.b00(r, r, 0, j), 0, &c.md(&c.b00(r, q, 0, j), 0, &s1));
            c.check(|| label("full"), lhs, int((l + 1) * (j + 1) * (j + 1)) * c.b00(r, r, 0, l));
        }
    }
}

fn identity_square(c: &Ctx) {
    for l in ELLS {
        let lhs = c.md(&c.identity(0, 0, l), -1, &c.identity(0, 0, l));
        let rhs = int(sign(l) * (l + 1)) * c.identity(0, 1, l) + int((l + 1) * (l + 1)) * c.identity(0, 0, l + 1);
        c.check(|| format!("l={l}"), lhs, rhs);
    }
}

fn identity_shifted(c: &Ctx) {
    for l in ELLS {
        let lhs = c.md(&c.identity(0, 0, l + 1), -1, &c.identity(0, 0, l));
        let rhs = int(sign(l + 1) * (l + 2)) * c.identity(0, 1, l) + int(l + 1) * c.identity(0, 0, l + 1);
        c.check(|| format!("l={l}"), lhs, rhs);
    }
}

fn identity_eigen(c: &Ctx) {
    for l in ELLS {
        for j in [l, l + 1].into_iter().filter(|j| j % 2 == 0) {
            for (p, q) in pairs(c) {
                for m in EXP {
                    for n2 in l..=3 {
                        let v = c.b00(p, q, m, n2);
                        let lhs = c.md(&c.identity(0, 0, j), 0, &v);
                        let k = int(m + 1) * binomial(-m - 2, j) + int(n2 + 1) * binomial(n2, j);
                        c.check(|| format!("l={l} j={j} p={p} q={q} m={m} n2={n2}"), lhs, k * v);
                    }
                }
            }
        }
    }
}

fn raise_offdiag(c: &Ctx) {
    for l in ELLS {
        for (p, q) in distinct_pairs(c) {
            for m in EXP {
                for n in EXP {
                    let inner = c.md_pow(&c.b00(q, q, 0, l), -1, n as u32, &c.b00(p, q, 0, l));
                    let lhs = c.md_pow(&c.b00(p, p, 0, l), -1, m as u32, &inner);
                    let k = (1..=m).fold(int(1), |acc, j| acc * int(j) * binomial(-j - 1, l))
                        * (0..n).fold(int(1), |acc, j| acc * int(l + j + 1) * binomial(l + j + 1, l));
                    c.check(|| format!("l={l} p={p} q={q} m={m} n={n}"), lhs, k * c.b00(p, q, m, l + n));
                }
            }
        }
    }
}

fn fold_offdiag(c: &Ctx) {
    for l in ELLS {
        for (p, q) in distinct_pairs(c) {
            for m in EXP {
                for n in 0..=3 - l {
                    let inner = c.md(&c.b00(q, p, 0, l), 0, &c.b00(p, q, m, l + n));
                    let lhs = c.md(&c.b00(p, p, 0, l), 0, &inner);
                    let (a, b) = (int(m + 1) * binomial(-m - 2, l), int(l + n + 1) * binomial(l + n, l));
                    let label = |s: &str| format!("l={l} p={p} q={q} m={m} n={n} {s}");
                    c.check(|| label("inner"), inner, a.clone() * c.b00(q, q, m, l + n) + b.clone() * c.b00(p, p, m, l + n));
                    c.check(|| label("full"), lhs, b.clone() * (a + b) * c.b00(p, p, m, l + n));
                }
            }
        }
    }
}

fn scalar_first(c: &Ctx) {
    for l in ELLS {
        for m in EXP {
            for n in 0..=3 - l {
                let lhs = c.md(&c.identity(0, 0, l), -1, &c.identity(0, m, l + n));
                let rhs = int(m + 1) * binomial(-m - 2, l) * c.identity(0, m + 1, l + n)
                    + int(l + n + 1) * binomial(l + n + 1, l) * c.identity(0, m, l + n + 1);
                c.check(|| format!("l={l} m={m} n={n}"), lhs, rhs);
            }
        }
    }
}

fn scalar_second(c: &Ctx) {
    for l in ELLS {
        for m in EXP {
            for n in 0..=3 - l {
                let lhs = c.md(&c.identity(0, 0, l + 1), -1, &c.identity(0, m, l + n));
                let rhs = int(m + 1) * binomial(-m - 2, l + 1) * c.identity(0, m + 1, l + n)
                    + int(l + n + 1) * binomial(l + n + 1, l + 1) * c.identity(0, m, l + n + 1);
                c.check(|| format!("l={l} m={m} n={n}"), lhs, rhs);
            }
        }
    }
}

/// The determinant of the two raising steps above, with entries read off the computed products.
fn scalar_determinant(c: &Ctx) {
    for l in ELLS {
        for m in EXP {
            for n in 0..=3 - l {
                let first = c.md(&c.identity(0, 0, l), -1, &c.identity(0, m, l + n));
                let second = c.md(&c.identity(0, 0, l + 1), -1, &c.identity(0, m, l + n));
                let up = c.b00(1, 1, m + 1, l + n);
                let right = c.b00(1, 1, m, l + n + 1);
                let coeff = |e: &Element, key: &Element| e.coeff(key.terms().keys().next().expect("basis element"));
                let det = coeff(&first, &up) * coeff(&second, &right) - coeff(&first, &right) * coeff(&second, &up);
                let closed = int((m + 1) * (l + n + 1) * (m + n + l + 3)) * frac(1, l + 1)
                    * binomial(-m - 2, l)
                    * binomial(l + n + 1, l);
                c.check_scalar(|| format!("l={l} m={m} n={n}"), det, closed);
            }
        }
    }
}

fn eigen_odd_diag(c: &Ctx) {
    for r in c.idx() {
        for (p, q) in pairs(c) {
            for m in EXP {
                for n1 in EXP {
                    for n2 in EXP {
                        let v = c.b11(p, q, n1, n2);
                        let lhs = c.md(&c.b11(r, r, 0, m), 0, &v);
                        let k = int(kron(r, p)) * binomial(-n1 - 1, m) - int(kron(r, q)) * binomial(n2, m);
                        c.check(|| format!("r={r} p={p} q={q} m={m} n=({n1},{n2})"), lhs, k * v);
                    }
                }
            }
        }
    }
}

fn odd_identity_eigen(c: &Ctx, m: i64, n: i64, sign: i64) {
    for (p, q) in pairs(c) {
        for j in EXP {
            for l in EXP {
                let v = c.b11(p, q, j, l);
                let lhs = c.md(&c.identity(1, m, n), 0, &v);
                c.check(|| format!("p={p} q={q} j={j} l={l}"), lhs, int(sign * (j + l + 1)) * v);
            }
        }
    }
}

fn odd_lower(c: &Ctx) {
    for (p, q) in pairs(c) {
        let lhs = c.md(&c.identity(1, 1, 0), 1, &c.b11(p, q, 0, 1));
        c.check(|| format!("p={p} q={q}"), lhs, 2 * c.b11(p, q, 0, 0));
    }
}

fn skew_eigen(c: &Ctx) {
    for r in c.idx() {
        for (p, q) in pairs(c) {
            for m in EXP {
                for n1 in EXP {
                    for n2 in EXP {
                        let v = skew(c, p, q, n1, n2);
                        let lhs = c.md(&(c.b11(r, r, m, 0) - c.b11(r, r, 0, m)), 0, &v);
                        let k = int(kron(r, p)) * (binomial(n1, m) - binomial(-n1 - 1, m))
                            + int(kron(r, q)) * (binomial(n2, m) - binomial(-n2 - 1, m));
                        c.check(|| format!("r={r} p={p} q={q} m={m} n=({n1},{n2})"), lhs, k * v);
                    }
                }
            }
        }
    }
}

fn sym_eigen(c: &Ctx) {
    for r in c.idx() {
        for (p, q) in pairs(c) {
            for m in EXP {
                for n1 in EXP {
                    for n2 in EXP {
                        let v = sym(c, p, q, n1, n2);
                        let lhs = c.md(&(c.b00(r, r, m, 0) + c.b00(r, r, 0, m)), 0, &v);
                        let k = int(kron(r, p) * (n1 + 1)) * (binomial(n1, m) + binomial(-n1 - 2, m))
                            + int(kron(r, q) * (n2 + 1)) * (binomial(n2, m) + binomial(-n2 - 2, m));
                        c.check(|| format!("r={r} p={p} q={q} m={m} n=({n1},{n2})"), lhs, k * v);
                    }
                }
            }
        }
    }
}

fn skew_taylor(c: &Ctx) {
    for (dp, dq) in [(1, 0), (0, 1), (1, 1)] {
        for m in EXP {
            for n1 in EXP {
                for n2 in EXP {
                    let lhs = int(dp) * (binomial(n1, m) - binomial(-n1 - 1, m))
                        + int(dq) * (binomial(n2, m) - binomial(-n2 - 1, m));
                    let rhs = int(dp) * taylor(n1, m, m) + int(dq) * taylor(n2, m, m)
                        - int(dp) * taylor(-n1 - 1, m, m)
                        - int(dq) * taylor(-n2 - 1, m, m);
                    c.check_scalar(|| format!("d=({dp},{dq}) m={m} n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

fn sym_taylor(c: &Ctx) {
    for (dp, dq) in [(1, 0), (0, 1), (1, 1)] {
        for m in EXP {
            for n1 in EXP {
                for n2 in EXP {
                    let lhs = int(dp * (n1 + 1)) * (binomial(n1, m) + binomial(-n1 - 2, m))
                        + int(dq * (n2 + 1)) * (binomial(n2, m) + binomial(-n2 - 2, m));
                    let rhs = int(dp) * taylor(n1 + 1, m + 1, m) + int(dq) * taylor(n2 + 1, m + 1, m)
                        - int(dp) * taylor(-n1 - 1, m + 1, m)
                        - int(dq) * taylor(-n2 - 1, m + 1, m);
                    c.check_scalar(|| format!("d=({dp},{dq}) m={m} n=({n1},{n2})"), lhs, rhs);
                }
            }
        }
    }
}

fn lift_offdiag_low(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        let u = lift(c, q);
        let v = skew(c, p, q, 1, 0);
        for n1 in EXP {
            for n2 in EXP {
                let label = |s: &str| format!("p={p} q={q} n=({n1},{n2}) {s}");
                let inner = c.md(&v, n1 - 1, &skew(c, p, q, n1, n2));
                let step = int(n2 + 1 - n1) * (c.b11(p, p, n1, n2 + 1 - n1) - c.b11(p, p, n2 + 1 - n1, n1))
                    + int(n1 + 1) * (c.b11(q, q, 1, n2) - c.b11(q, q, n2, 1));
                c.check(|| label("inner"), inner.clone(), step);
                let lhs = c.md(&u, n2, &inner);
                let k = (n1 + 1) * (3 * kron(n2, 0) + n2 + 1 - 2 * kron(n2, 1));
                c.check(|| label("full"), lhs, k * u.clone());
            }
        }
    }
}

fn lift_offdiag_high(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        let u = lift(c, q);
        let v = skew(c, p, q, 1, 0);
        for n1 in EXP {
            for n2 in EXP {
                let label = |s: &str| format!("p={p} q={q} n=({n1},{n2}) {s}");
                let inner = c.md(&v, n1, &skew(c, p, q, n1, n2));
                let step = int(n2 - n1) * (c.b11(p, p, n1, n2 - n1) - c.b11(p, p, n2 - n1, n1))
                    + int(n1 + 1) * (c.b11(q, q, 0, n2) - c.b11(q, q, n2, 0));
                c.check(|| label("inner"), inner.clone(), step);
                let lhs = c.md(&u, n2 - 1, &inner);
                let k = (n1 + 1) * (2 * kron(0, n2) - n2 - 2 - kron(1, n2));
                c.check(|| label("full"), lhs, k * u.clone());
            }
        }
    }
}

/// The scalar by which `[(E_{q,q})_{[1,1]}(1,0)-(E_{q,q})_{[1,1]}(0,1)](a+b-1)`
/// maps `(E_{q,q})_{[1,1]}(a,b)-(E_{q,q})_{[1,1]}(b,a)` onto its own actor.
fn skew_drop(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        return 0;
    }
    kron(b, 0) * (a + 2) + kron(a, 1) * (b + 1) - kron(a, 0) * (b + 2) - kron(b, 1) * (a + 1)
}

fn lift_diag(c: &Ctx) {
    for q in c.idx() {
        let u = lift(c, q);
        for n1 in EXP {
            for n2 in EXP {
                if n1 == n2 {
                    continue;
                }
                let label = |s: &str| format!("q={q} n=({n1},{n2}) {s}");
                let inner = c.md(&u, n1, &skew(c, q, q, n1, n2));
                let step = int(2 * n2 - n1 + 1) * (c.b11(q, q, n1, n2 - n1) - c.b11(q, q, n2 - n1, n1))
                    + int(n1 + 1) * (c.b11(q, q, 0, n2) - c.b11(q, q, n2, 0));
                c.check(|| label("inner"), inner.clone(), step);
                let lhs = c.md(&u, n2 - 1, &inner);
                let mu = (2 * n2 - n1 + 1) * skew_drop(n1, n2 - n1) + (n1 + 1) * skew_drop(0, n2);
                c.check(|| label("full"), lhs, mu * u.clone());
            }
        }
    }
}

/// Every skew seed reaches a nonzero multiple of `lift(q)` through the
/// mode chains above, so any ideal containing the seed contains `lift(q)`.
fn lift_in_ideal(c: &Ctx) {
    for (p, q) in pairs(c) {
        let u = lift(c, q);
        let v = skew(c, p, q, 1, 0);
        for n1 in EXP {
            for n2 in EXP {
                if p == q && n1 == n2 {
                    continue;
                }
                let seed = skew(c, p, q, n1, n2);
                let witnesses = if p != q {
                    vec![
                        c.md(&u, n2, &c.md(&v, n1 - 1, &seed)),
                        c.md(&u, n2 - 1, &c.md(&v, n1, &seed)),
                    ]
                } else {
                    let swapped = skew(c, q, q, n2, n1);
                    vec![c.md(&u, n2 - 1, &c.md(&u, n1, &seed)), c.md(&u, n1 - 1, &c.md(&u, n2, &swapped))]
                };
                c.check_multiple(|| format!("p={p} q={q} n=({n1},{n2})"), &witnesses, &u);
            }
        }
    }
}

fn lift_spread(c: &Ctx) {
    for (j, q) in distinct_pairs(c) {
        let w = c.b11(j, q, 0, 1) - c.b11(q, j, 1, 0);
        let once = c.md(&w, 0, &lift(c, q));
        let step = w.clone() + 2 * (c.b11(q, j, 0, 1) - c.b11(j, q, 1, 0));
        c.check(|| format!("j={j} q={q} first"), once.clone(), step);
        let twice = c.md(&w, 0, &once);
        c.check(|| format!("j={j} q={q} full"), twice, 4 * lift(c, j) + 2 * lift(c, q));
    }
}

fn lift_sum(c: &Ctx) {
    let lhs = c.identity(1, 1, 0) - c.identity(1, 0, 1);
    let rhs = (1..=c.k()).fold(c.zero(), |acc, q| acc + lift(c, q));
    c.check(|| "sum".into(), lhs, rhs);
}

fn lift_raise(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        let v = skew(c, p, q, 1, 0);
        for m in EXP {
            for n in EXP {
                let inner = c.md_pow(&lift(c, q), -1, n as u32, &v);
                let lhs = c.md_pow(&lift(c, p), -1, m as u32, &inner);
                let k = int(1 << (m + n)) * fact(m + 1) * fact(n);
                c.check(|| format!("p={p} q={q} m={m} n={n}"), lhs, k * skew(c, p, q, m + 1, n));
            }
        }
    }
}

fn lift_lower(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        let lhs = c.md(&lift(c, p), 1, &skew(c, p, q, 1, 0));
        c.check(|| format!("p={p} q={q}"), lhs, 2 * skew(c, p, q, 0, 0));
    }
}

fn lift_back(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        let w = c.b11(p, q, 0, 1) - c.b11(q, p, 1, 0);
        for m in EXP {
            for n in EXP {
                let label = |s: &str| format!("p={p} q={q} m={m} n={n} {s}");
                let inner = c.md(&w, 0, &skew(c, p, q, m, n));
                let step = int(n + 1) * (c.b11(p, p, n, m) - c.b11(p, p, m, n))
                    + int(m) * (c.b11(q, q, n, m) - c.b11(q, q, m, n));
                c.check(|| label("inner"), inner.clone(), step);
                let lhs = c.md(&lift(c, p), 0, &inner);
                let rhs = int(2 * (n + 1) * (m + n + 1)) * (c.b11(p, p, n, m) - c.b11(p, p, m, n));
                c.check(|| label("full"), lhs, rhs);
            }
        }
    }
}

fn rank_one_skew_first(c: &Ctx) {
    for m in EXP {
        for n in EXP {
            let lhs = c.md(&lift(c, 1), -1, &skew(c, 1, 1, m, n));
            let rhs = int(2 * (m + 1)) * skew(c, 1, 1, m + 1, n) + int(2 * (n + 1)) * skew(c, 1, 1, m, n + 1);
            c.check(|| format!("m={m} n={n}"), lhs, rhs);
        }
    }
}

fn rank_one_skew_cubic(c: &Ctx) {
    for m in EXP {
        for n in EXP {
            let lhs = c.md(&skew(c, 1, 1, 3, 0), -1, &skew(c, 1, 1, m, n));
            let binom = (binomial(m + 1, 3) - binomial(-m - 1, 3)) * skew(c, 1, 1, m + 1, n)
                + (binomial(n + 1, 3) - binomial(-n - 1, 3)) * skew(c, 1, 1, m, n + 1);
            c.check(|| format!("m={m} n={n} binomial form"), lhs.clone(), binom);
            let cubic = frac(1, 3)
                * (int((m + 1) * (m * m + 2 * m + 3)) * skew(c, 1, 1, m + 1, n)
                    + int((n + 1) * (n * n + 2 * n + 3)) * skew(c, 1, 1, m, n + 1));
            c.check(|| format!("m={m} n={n} cubic form"), lhs, cubic);
        }
    }
}

fn rank_one_skew_det(c: &Ctx) {
    for m in EXP {
        for n in EXP {
            let det = int(m + 1) * int((n + 1) * (n * n + 2 * n + 3)) - int(n + 1) * int((m + 1) * (m * m + 2 * m + 3));
            c.check_scalar(|| format!("m={m} n={n}"), det, int((n - m) * (m + n + 2) * (m + 1) * (n + 1)));
        }
    }
}

fn sym_offdiag(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        let a = sym(c, p, q, 0, 0);
        for m in EXP {
            for n in EXP {
                let label = |s: &str| format!("p={p} q={q} m={m} n={n} {s}");
                let inner = c.md(&a, m, &sym(c, p, q, m, n));
                let step = int(m + 1) * (c.b00(q, q, 0, n) + c.b00(q, q, n, 0))
                    + int(n + 1) * (c.b00(p, p, m, n - m) + c.b00(p, p, n - m, m));
                c.check(|| label("inner"), inner.clone(), step);
                let lhs = c.md(&c.b00(q, q, 0, 0), n, &inner);
                let k = 2 * (m + 1) * (n + 1) * (1 + kron(0, n));
                c.check(|| label("full"), lhs, k * c.b00(q, q, 0, 0));
            }
        }
    }
}

fn sym_diag(c: &Ctx) {
    for q in c.idx() {
        let e = c.b00(q, q, 0, 0);
        for m in EXP {
            for n in EXP {
                let label = |s: &str| format!("q={q} m={m} n={n} {s}");
                let inner = c.md(&e, m, &sym(c, q, q, m, n));
                let step = int(m + 1) * (c.b00(q, q, 0, n) + c.b00(q, q, n, 0))
                    + int(n + 1) * (c.b00(q, q, n - m, m) + c.b00(q, q, m, n - m));
                c.check(|| label("inner"), inner.clone(), step);
                let lhs = c.md(&e, n, &inner);
                let (dn0, dm0, dmn) = (kron(n, 0), kron(m, 0), kron(m, n));
                let k = 2 * (m + 1) * (n + 1 + dn0) + 2 * (n + 1) * (dm0 * (n + 1) + dmn * (m + 1));
                c.check(|| label("full"), lhs, k * e.clone());
            }
        }
    }
}

fn sym_spread(c: &Ctx) {
    for (j, q) in distinct_pairs(c) {
        let lhs = c.md_pow(&sym(c, j, q, 0, 0), 0, 2, &c.b00(q, q, 0, 0));
        c.check(|| format!("j={j} q={q}"), lhs, 2 * (c.b00(j, j, 0, 0) + c.b00(q, q, 0, 0)));
    }
}

fn sym_raise(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        for m in EXP {
            for n in EXP {
                let inner = c.md_pow(&c.b00(q, q, 0, 0), -1, n as u32, &sym(c, p, q, 0, 0));
                let lhs = c.md_pow(&c.b00(p, p, 0, 0), -1, m as u32, &inner);
                c.check(|| format!("p={p} q={q} m={m} n={n}"), lhs, fact(m) * fact(n) * sym(c, p, q, m, n));
            }
        }
    }
}

fn sym_fold(c: &Ctx) {
    for (p, q) in distinct_pairs(c) {
        for m in EXP {
            for n in EXP {
                let inner = c.md(&sym(c, p, q, 0, 0), 0, &sym(c, p, q, m, n));
                let lhs = c.md(&c.b00(p, p, 0, 0), 0, &inner);
                let rhs = int((m + n + 2) * (n + 1)) * (c.b00(p, p, m, n) + c.b00(p, p, n, m));
                c.check(|| format!("p={p} q={q} m={m} n={n}"), lhs, rhs);
            }
        }
    }
}

fn rank_one_sym_first(c: &Ctx) {
    for m in EXP {
        for n in EXP {
            let lhs = c.md(&c.b00(1, 1, 0, 0), -1, &sym(c, 1, 1, m, n));
            let rhs = int(m + 1) * sym(c, 1, 1, m + 1, n) + int(n + 1) * sym(c, 1, 1, m, n + 1);
            c.check(|| format!("m={m} n={n}"), lhs, rhs);
        }
    }
}

fn rank_one_sym_second(c: &Ctx) {
    for m in EXP {
        for n in EXP {
            let lhs = c.md(&c.b00(1, 1, 1, 1), -1, &sym(c, 1, 1, m, n));
            let rhs = int(-(m + 1) * (m + 1) * (m + 2)) * sym(c, 1, 1, m + 1, n)
                + int(-(n + 1) * (n + 1) * (n + 2)) * sym(c, 1, 1, m, n + 1);
            c.check(|| format!("m={m} n={n}"), lhs, rhs);
        }
    }
}

fn rank_one_sym_det(c: &Ctx) {
    for m in EXP {
        for n in EXP {
            let det = int(m + 1) * int(-(n + 1) * (n + 1) * (n + 2)) - int(n + 1) * int(-(m + 1) * (m + 1) * (m + 2));
            c.check_scalar(|| format!("m={m} n={n}"), det, int((m - n) * (m + n + 3) * (m + 1) * (n + 1)));
        }
    }
}

pub(super) fn cases() -> Vec<Case> {
    vec![
        case("(3.7)", "(E_{r,r}(0,m))(0)E_{p,q}(n_1,n_2)", K2, eigen_diag),
        case("(3.14)", "(E_{q,q}(0,j))(n-\\ell)(E_{q,p}(0,j))(m)E_{p,q}(m,n)", K2, reduce_to_diag),
        case("(3.15)", "(E_{r,r}(0,j))(0)(E_{r,q}(0,j))(0)(E_{q,r}(0,\\ell))(0)E_{q,q}(0,\\ell)", K2, transfer_diag),
        case("(3.17)", "(I_k(0,\\ell))(-1)I_k(0,\\ell)", K2, identity_square),
        case("(3.18)", "(I_k(0,\\ell+1))(-1)I_k(0,\\ell)", K2, identity_shifted),
        case("(3.19)", "(I_k(0,j))(0)u(m,\\ell+n)", K2, identity_eigen),
        corrected("(3.21)", "[(E_{p,p}(0,\\ell))(-1)]^m[(E_{q,q}(0,\\ell))(-1)]^nE_{p,q}(0,\\ell)", K2, "the second product has (\\ell+j+1)C(\\ell+j+1,\\ell), not (\\ell+j+1)C(\\ell+j,\\ell)", raise_offdiag),
        corrected("(3.22)", "(E_{p,p}(0,\\ell))(0)(E_{q,p}(0,\\ell))(0)E_{p,q}(m,\\ell+n)", K2, "the scalar is (\\ell+n+1)C(\\ell+n,\\ell) times the full eigenvalue (m+1)C(-m-2,\\ell)+(\\ell+n+1)C(\\ell+n,\\ell) of the outer mode", fold_offdiag),
        case("(3.23)", "(I_1(0,\\ell))(-1)I_1(m,\\ell+n)", K1, scalar_first),
        case("(3.24)", "(I_1(0,\\ell+1))(-1)I_1(m,\\ell+n)", K1, scalar_second),
        case("(3.25)", "(m+1)(^{-m-2}_{\\;\\;\\;\\ell}),&(\\ell+n+1)(^{\\ell+n+1}_{\\;\\;\\;\\;\\;\\ell})", K1, scalar_determinant),
        case("(3.27)", "[(E_{r,r})_{[1,1]}(0,m)](0)(E_{p,q})_{[1,1]}(n_1,n_2)", K2, eigen_odd_diag),
        case("(3.37)", "[(I_k)_{[1,1]}(0,1)](0)u_{[1,1]}(j,l)", K2, |c| odd_identity_eigen(c, 0, 1, -1)),
        case("(3.38)", "[(I_k)_{[1,1]}(1,0)](0)u_{[1,1]}(j,l)", K2, |c| odd_identity_eigen(c, 1, 0, 1)),
        case("(3.39)", "[(I_k)_{[1,1]}(1,0)](1)(E_{p,q})_{[1,1]}(0,1)", K2, odd_lower),
        case("(3.40)", "[(I_1)_{[1,1]}(1,0)](1)(I_1)_{[1,1]}(0,2)", K1, |c| {
            let lhs = c.md(&c.b11(1, 1, 1, 0), 1, &c.b11(1, 1, 0, 2));
            c.check(|| "k=1".into(), lhs, 3 * c.b11(1, 1, 0, 1));
        }),
        corrected("(3.41)", "[(I_1)_{[1,1]}(0,2)](-1)(I_1)_{[1,1]}(1,0)", K1, "the coefficient is 3, not 6", |c| {
            let lhs = c.md(&c.b11(1, 1, 0, 2), -1, &c.b11(1, 1, 1, 0));
            c.check(|| "k=1".into(), lhs, 3 * c.b11(1, 1, 2, 0));
        }),
        case("(3.47)", "[(E_{r,r})_{[1,1]}(m,0)-(E_{r,r})_{[1,1]}(0,m)](0)", K2, skew_eigen),
        case("(3.48)", "(E_{r,r})(m,0)+E_{r,r}(0,m))(0)(E_{p,q}(n_1,n_2)+E_{q,p}(n_2,n_1))", K2, sym_eigen),
        case("(3.49)", "{1\\over m!}{d^m\\over dx^m}[\\delta_{r,p}x^{n_1}", K2, skew_taylor),
        corrected(
            "(3.50)",
            "{1\\over m!}{d^{m+1}\\over dx^{m+1}}[\\delta_{r,p}x^{n_1+1}",
            K2,
            "the negative powers are x^{-n_1-1} and x^{-n_2-1}, not x^{-n_1-2} and x^{-n_2-2}",
            sym_taylor,
        ),
        corrected("(3.52)", "(n_2)[(E_{p,q})_{[1,1]}(1,0)-(E_{q,p})_{[1,1]}(0,1)](n_1-1)", K2, "the first intermediate coefficient is (n_2+1-n_1), not (n_1-n_2-1)", lift_offdiag_low),
        case("(3.53)", "(n_2-1)[(E_{p,q})_{[1,1]}(1,0)-(E_{q,p})_{[1,1]}(0,1)](n_1)", K2, lift_offdiag_high),
        corrected("(3.55)", "(n_2-1)[(E_{q,q})_{[1,1]}(1,0)-(E_{q,q})_{[1,1]}(0,1)](n_1)", K2, "the final scalar is (2n_2-n_1+1)h(n_1,n_2-n_1)+(n_1+1)h(0,n_2) with h(a,b)=\\delta_{b,0}(a+2)+\\delta_{a,1}(b+1)-\\delta_{a,0}(b+2)-\\delta_{b,1}(a+1)", lift_diag),
        case("(3.54)", "(E_{q,q})_{[1,1]}(1,0)-(E_{q,q})_{[1,1]}(0,1)\\in{\\cal I}", K2, lift_in_ideal),
        case("(3.56)", "[[(E_{j,q})_{[1,1]}(0,1)-(E_{q,j})_{[1,1]}(1,0)](0)]^2", K2, lift_spread),
        case("(3.57)", "(I_k)_{[1,1]}(1,0)-(I_k)_{[1,1]}(0,1)=\\sum_{q=1}^k", K2, lift_sum),
        case("(3.58)", "([(E_{p,p})_{[1,1]}(1,0)-(E_{p,p})_{[1,1]}(0,1)](-1))^m", K2, lift_raise),
        case("(3.59)", "[(E_{p,p})_{[1,1]}(1,0)-(E_{p,p})_{[1,1]}(0,1)](1)", K2, lift_lower),
        case("(3.60)", "[(E_{p,q})_{[1,1]}(0,1)-(E_{q,p})_{[1,1]}(1,0)](0)", K2, lift_back),
        case("(3.61)", "[(I_1)_{[1,1]}(1,0)-(I_1)_{[1,1]}(0,1)](-1)", K1, rank_one_skew_first),
        case("(3.62)", "[(I_1)_{[1,1]}(3,0)-(I_1)_{[1,1]}(0,3)](-1)", K1, rank_one_skew_cubic),
        case("(3.63)", "(m+1)(m^2+2m+3),&(n+1)(n^2+2n+3)", K1, rank_one_skew_det),
        case("(3.67)", "E_{q,q}(n)(E_{p,q}+E_{q,p})(m)(E_{p,q}(m,n)+E_{q,p}(n,m))", K2, sym_offdiag),
        corrected("(3.68)", "E_{q,q}(n)E_{q,q}(m)(E_{q,q}(m,n)+E_{q,q}(n,m))", K2, "the scalar is 2(m+1)(n+1+\\delta_{n,0})+2(n+1)(\\delta_{m,0}(n+1)+\\delta_{m,n}(m+1)), which differs from the printed form at m=0<n", sym_diag),
        case("(3.69)", "(E_{j,q}+E_{q,j})_1^2(E_{q,q})", K2, sym_spread),
        corrected("(3.70)", "(E_{p,p}(-1))^m(E_{q,q}(-1))^n(E_{p,q}+E_{q,p})", K2, "the scalar is m!n!, not (m+1)!(n+1)!", sym_raise),
        case("(3.71)", "E_{p,p}(0)(E_{p,q}+E_{q,p})(0)(E_{p,q}(m,n)+E_{q,p}(n,m))", K2, sym_fold),
        case("(3.72)", "I_1(-1)(I_1(m,n)+I_1(n,m))", K1, rank_one_sym_first),
        case("(3.73)", "(I_1(1,1))(-1)(I_1(m,n)+I_1(n,m))", K1, rank_one_sym_second),
        case("(3.74)", "-(m+1)^2(m+2),&-(n+1)^2(n+2)", K1, rank_one_sym_det),
    ]
}
