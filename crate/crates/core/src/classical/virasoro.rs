//! The rank-one conformal algebra spanned by `L(-d-2)`, `d >= 0`, of the centerless Virasoro algebra.

use num_traits::Zero;

use crate::carrier::Conformal;
use crate::error::Result;
use crate::laurent::{Laurent, Vector};
use crate::lincomb::LinComb;
use crate::scalar::{binomial, int, Scalar};

/// Key `d` stands for `L(-d-2)`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct VirasoroElement {
    pub terms: LinComb<u32>,
}

impl VirasoroElement {
    pub fn basis(depth: u32) -> Self {
        VirasoroElement { terms: LinComb::single(depth) }
    }
}

impl Vector for VirasoroElement {
    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
    fn axpy(&mut self, c: &Scalar, other: &Self) {
        self.terms.axpy(c, &other.terms);
    }
    fn render(&self) -> String {
        self.terms.render_with(|&d| format!("L(-{})", d + 2))
    }
}

/// `Y+(L(-m-2), z) = (1/m!) (d/dz)^m sum_j L(j-1) z^{-j-1}` with
/// `L(j-1) L(-n-2) = [L(j-1), L(-n-2)] = (j+n+1) L(j-n-3)` for `j < n+2`
/// and zero otherwise, since `L(j-n-3)` with `j > n+1` lies in the subalgebra quotiented out.
#[derive(Clone, Copy, Debug, Default)]
pub struct VirasoroConformal;

impl VirasoroConformal {
    pub fn basis_up_to(&self, max_depth: u32) -> Vec<VirasoroElement> {
        (0..=max_depth).map(VirasoroElement::basis).collect()
    }

    /// `L(j-1) L(-n-2)`, from `[L(a), L(b)] = (a-b) L(a+b)`.
    pub fn act(&self, j: u32, n: u32) -> VirasoroElement {
        if j >= n + 2 {
            return VirasoroElement::default();
        }
        let c = int(j as i64 + n as i64 + 1);
        VirasoroElement { terms: LinComb::term(n + 1 - j, c) }
    }
}

impl Conformal for VirasoroConformal {
    type Elem = VirasoroElement;

    fn zero(&self) -> VirasoroElement {
        VirasoroElement::default()
    }

    fn partial(&self, e: &VirasoroElement) -> VirasoroElement {
        VirasoroElement { terms: e.terms.map_linear(|&n| LinComb::term(n + 1, int(n as i64 + 1))) }
    }

    fn y_plus(&self, u: &VirasoroElement, v: &VirasoroElement) -> Laurent<VirasoroElement> {
        let zero = self.zero();
        let mut out = Laurent::new();
        for (&m, cu) in &u.terms {
            for (&n, cv) in &v.terms {
                for j in 0..n + 2 {
                    let c = binomial(-(j as i64) - 1, m as i64) * cu * cv;
                    if !c.is_zero() {
                        out.add_at(j + m, &c, &self.act(j, n), &zero);
                    }
                }
            }
        }
        out
    }

    fn parity(&self, e: &VirasoroElement) -> Result<Option<u8>> {
        Ok((!e.terms.is_zero()).then_some(0))
    }

    fn name(&self) -> String {
        "virasoro".into()
    }
}

/// Coefficient of `x^m y^n z^{-a-1}` in `F(y) / (z + x - y)^pole` as
/// `(scalar, s)` where `s` indexes the coefficient `F_s` of `y^s`.
/// Uses `1/(z-w)^p = sum_a C(a, p-1) w^{a-p+1} z^{-a-1}` with `w = y - x`.
fn pole_coefficient(pole: u32, a: u32, m: u32, n: u32) -> Option<(Scalar, u32)> {
    let e = (a + 1).checked_sub(pole)?;
    if m > e || n + m < e {
        return None;
    }
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let c = binomial(a as i64, pole as i64 - 1) * binomial(e as i64, m as i64) * int(sign);
    Some((c, n + m - e))
}

/// Checks `Y+(L[x], z) L[y] = L'[y] / (z+x-y) + 2 L[y] / (z+x-y)^2` with
/// `L[x] = sum_m L(-m-2) x^m`, coefficient by coefficient for `m, n <= max_depth`.
/// Also checks that no mode beyond the second-order pole contributes.
pub fn virasoro_two_pole_check(max_depth: u32) -> (usize, Vec<String>) {
    let c = VirasoroConformal;
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for m in 0..=max_depth {
        for n in 0..=max_depth {
            let lhs = c.y_plus(&VirasoroElement::basis(m), &VirasoroElement::basis(n));
            for a in 0..=m + n + 3 {
                checked += 1;
                let mut rhs = VirasoroElement::default();
                // L'[y] has y^s coefficient (s+1) L(-s-3)
                if let Some((k, s)) = pole_coefficient(1, a, m, n) {
                    rhs.axpy(&(k * int(s as i64 + 1)), &VirasoroElement::basis(s + 1));
                }
                if let Some((k, s)) = pole_coefficient(2, a, m, n) {
                    rhs.axpy(&(k * int(2)), &VirasoroElement::basis(s));
                }
                let got = lhs.mode_or(a, &c.zero());
                if got != rhs {
                    mismatches.push(format!(
                        "x^{m} y^{n} z^{}: {} vs {}",
                        -(a as i64) - 1,
                        got.render(),
                        rhs.render()
                    ));
                }
            }
        }
    }
    (checked, mismatches)
}

/// `d^p L(-2) = p! L(-2-p)`, so every element is a unique combination of powers of `d` on `L(-2)`.
pub fn virasoro_free_decompose(e: &VirasoroElement) -> LinComb<u32> {
    e.terms.iter().map(|(&d, c)| (d, c / Scalar::from_integer(crate::scalar::factorial(d as u64)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_product() {
        let c = VirasoroConformal;
        let l2 = VirasoroElement::basis(0);
        let y = c.y_plus(&l2, &l2);
        assert_eq!(y.mode_or(0, &c.zero()).render(), "L(-3)");
        assert_eq!(y.mode_or(1, &c.zero()).render(), "2*L(-2)");
        assert_eq!(y.max_mode(), Some(1));
    }

    #[test]
    fn action_is_the_bracket() {
        let c = VirasoroConformal;
        // [L(1), L(-3)] = 4 L(-2)
        assert_eq!(c.act(2, 1).render(), "4*L(-2)");
        assert!(c.act(3, 1).is_zero());
    }

    #[test]
    fn derivative() {
        let c = VirasoroConformal;
        assert_eq!(c.partial(&VirasoroElement::basis(1)).render(), "2*L(-4)");
    }

    #[test]
    fn two_poles() {
        let (checked, bad) = virasoro_two_pole_check(4);
        assert!(checked > 0);
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn free_generation_by_l2() {
        let c = VirasoroConformal;
        let mut e = VirasoroElement::basis(3);
        e.axpy(&int(4), &VirasoroElement::basis(0));
        let mut rebuilt = c.zero();
        for (&p, coeff) in &virasoro_free_decompose(&e) {
            let mut g = VirasoroElement::basis(0);
            for _ in 0..p {
                g = c.partial(&g);
            }
            rebuilt.axpy(coeff, &g);
        }
        assert_eq!(rebuilt, e);
    }
}
