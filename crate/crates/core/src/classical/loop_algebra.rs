//! The conformal algebra `g ⊗ t^{-1} F[t^{-1}]` of a loop Lie algebra.

use num_traits::Zero;

use crate::carrier::Conformal;
use crate::error::{Error, Result};
use crate::laurent::{Laurent, Vector};
use crate::lincomb::LinComb;
use crate::scalar::{binomial, int, Scalar};

/// A finite-dimensional Lie algebra given by structure constants on a named basis.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `table[x][y]` is `[b_x, b_y]` expanded in the basis.
    table: Vec<Vec<LinComb<usize>>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on basis triples.
    pub fn new(names: Vec<String>, table: Vec<Vec<LinComb<usize>>>) -> Result<Self> {
        let n = names.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Config(format!("structure table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|b| b.keys().any(|&z| z >= n)) {
            return Err(Error::Config("structure constant refers to a missing basis vector".into()));
        }
        let lie = LieAlgebra { names, table };
        for x in 0..n {
            for y in 0..n {
                let mut sym = lie.table[x][y].clone();
                sym.axpy(&int(1), &lie.table[y][x]);
                if !sym.is_zero() {
                    return Err(Error::Config(format!("bracket of {} and {} is not antisymmetric", lie.names[x], lie.names[y])));
                }
                for z in 0..n {
                    // [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
                    let mut jac = lie.bracket_basis_left(x, &lie.table[y][z]);
                    jac.axpy(&int(1), &lie.bracket_basis_left(y, &lie.table[z][x]));
                    jac.axpy(&int(1), &lie.bracket_basis_left(z, &lie.table[x][y]));
                    if !jac.is_zero() {
                        return Err(Error::Config(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            lie.names[x], lie.names[y], lie.names[z]
                        )));
                    }
                }
            }
        }
        Ok(lie)
    }

    /// `sl_2` on `e, f, h` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let (e, f, h) = (0usize, 1usize, 2usize);
        let mut table = vec![vec![LinComb::new(); 3]; 3];
        let mut set = |x: usize, y: usize, z: usize, c: i64| {
            table[x][y] = LinComb::term(z, int(c));
            table[y][x] = LinComb::term(z, int(-c));
        };
        set(h, e, e, 2);
        set(h, f, f, -2);
        set(e, f, h, 1);
        LieAlgebra::new(vec!["e".into(), "f".into(), "h".into()], table).expect("sl2 is a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn bracket_basis(&self, x: usize, y: usize) -> &LinComb<usize> {
        &self.table[x][y]
    }

    fn bracket_basis_left(&self, x: usize, v: &LinComb<usize>) -> LinComb<usize> {
        v.map_linear(|&y| self.table[x][y].clone())
    }

    pub fn bracket(&self, u: &LinComb<usize>, v: &LinComb<usize>) -> LinComb<usize> {
        u.map_linear(|&x| self.bracket_basis_left(x, v))
    }
}

/// Key `(basis index, depth)` stands for `b ⊗ t^{-depth}`, depth at least 1.
#[derive(Clone, Debug, PartialEq)]
pub struct LoopElement {
    pub terms: LinComb<(usize, u32)>,
    names: std::sync::Arc<Vec<String>>,
}

impl LoopElement {
    pub fn term(&self, x: usize, depth: u32, c: Scalar) -> LoopElement {
        LoopElement { terms: LinComb::term((x, depth), c), names: self.names.clone() }
    }
}

impl Vector for LoopElement {
    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
    fn axpy(&mut self, c: &Scalar, other: &Self) {
        self.terms.axpy(c, &other.terms);
    }
    fn render(&self) -> String {
        self.terms.render_with(|&(x, d)| format!("{}*t^-{d}", self.names[x]))
    }
}

/// `Y+(u ⊗ t^{-m-1}, z) = (1/m!) (d/dz)^m sum_j (u ⊗ t^j) z^{-j-1}`, where
/// `u ⊗ t^j` acts on `v ⊗ t^{-n}` by `[u,v] ⊗ t^{j-n}` for `j < n` and by zero otherwise.
#[derive(Clone, Debug)]
pub struct LoopConformal {
    lie: LieAlgebra,
    names: std::sync::Arc<Vec<String>>,
}

impl LoopConformal {
    pub fn new(lie: LieAlgebra) -> Self {
        let names = std::sync::Arc::new(lie.names.clone());
        LoopConformal { lie, names }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn basis(&self, x: usize, depth: u32) -> LoopElement {
        assert!(depth >= 1, "loop elements have depth at least 1");
        LoopElement { terms: LinComb::single((x, depth)), names: self.names.clone() }
    }

    /// All `b ⊗ t^{-d}` with `1 <= d <= max_depth`.
    pub fn basis_up_to(&self, max_depth: u32) -> Vec<LoopElement> {
        (1..=max_depth).flat_map(|d| (0..self.lie.dim()).map(move |x| (x, d))).map(|(x, d)| self.basis(x, d)).collect()
    }

    /// `(u ⊗ t^j)(v ⊗ t^{-n})`.
    pub fn act(&self, x: usize, j: u32, y: usize, n: u32) -> LinComb<(usize, u32)> {
        if j >= n {
            return LinComb::new();
        }
        self.lie.bracket_basis(x, y).map_linear(|&z| LinComb::single((z, n - j)))
    }

    /// Writes `e` over `d^power (b ⊗ t^{-1})`, using `d^p (b ⊗ t^{-1}) = p! b ⊗ t^{-1-p}`.
    pub fn free_decompose(&self, e: &LoopElement) -> LinComb<(u32, usize)> {
        e.terms
            .iter()
            .map(|(&(x, d), c)| ((d - 1, x), c / Scalar::from_integer(crate::scalar::factorial((d - 1) as u64))))
            .collect()
    }

    pub fn free_expand(&self, decomposition: &LinComb<(u32, usize)>) -> LoopElement {
        let mut out = self.zero();
        for (&(p, x), c) in decomposition {
            let mut g = self.basis(x, 1);
            for _ in 0..p {
                g = self.partial(&g);
            }
            out.axpy(c, &g);
        }
        out
    }
}

impl Conformal for LoopConformal {
    type Elem = LoopElement;

    fn zero(&self) -> LoopElement {
        LoopElement { terms: LinComb::new(), names: self.names.clone() }
    }

    fn partial(&self, e: &LoopElement) -> LoopElement {
        let terms = e.terms.map_linear(|&(x, n)| LinComb::term((x, n + 1), int(n as i64)));
        LoopElement { terms, names: self.names.clone() }
    }

    fn y_plus(&self, u: &LoopElement, v: &LoopElement) -> Laurent<LoopElement> {
        let zero = self.zero();
        let mut out = Laurent::new();
        for (&(x, du), cu) in &u.terms {
            let m = du - 1;
            for (&(y, n), cv) in &v.terms {
                for j in 0..n {
                    let c = binomial(-(j as i64) - 1, m as i64) * cu * cv;
                    if c.is_zero() {
                        continue;
                    }
                    let image = LoopElement { terms: self.act(x, j, y, n), names: self.names.clone() };
                    out.add_at(j + m, &c, &image, &zero);
                }
            }
        }
        out
    }

    fn parity(&self, e: &LoopElement) -> Result<Option<u8>> {
        Ok((!e.terms.is_zero()).then_some(0))
    }

    fn name(&self) -> String {
        format!("loop({})", self.names.join(","))
    }
}

/// Compares `Y+(u[x], z) v[y] = [u,v][y] / (z + x - y)` coefficientwise, for
/// basis vectors `u, v` and `u[x] = sum_m (u ⊗ t^{-m-1}) x^m`. The right side
/// expands `1/(z-w)` with `w = y - x` as `sum_a w^a z^{-a-1}`, so the
/// coefficient of `x^m y^n z^{-a-1}` is `C(a,m) (-1)^m [u,v] ⊗ t^{-(n+m-a)-1}`
/// when `m <= a <= n + m`.
pub fn loop_generating_check(c: &LoopConformal, max_depth: u32) -> (usize, Vec<String>) {
    let dim = c.lie().dim();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for x in 0..dim {
        for y in 0..dim {
            for m in 0..max_depth {
                for n in 0..max_depth {
                    let lhs = c.y_plus(&c.basis(x, m + 1), &c.basis(y, n + 1));
                    let top = m + n + 2;
                    for a in 0..=top {
                        checked += 1;
                        let mut rhs = c.zero();
                        if a >= m && a <= n + m {
                            let coeff = binomial(a as i64, m as i64) * int(if m % 2 == 0 { 1 } else { -1 });
                            let depth = n + m - a + 1;
                            for (&z, bc) in c.lie().bracket_basis(x, y) {
                                rhs.axpy(&(&coeff * bc), &c.basis(z, depth));
                            }
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
        }
    }
    (checked, mismatches)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_modes() {
        let c = LoopConformal::new(LieAlgebra::sl2());
        let e = c.basis(0, 1);
        let f = c.basis(1, 1);
        let h = c.basis(2, 1);
        let y = c.y_plus(&e, &f);
        assert_eq!(y.render(), "(h*t^-1)*z^-1");
        assert!(c.y_plus(&h, &h).is_zero());
        assert_eq!(c.partial(&c.basis(0, 2)).render(), "2*e*t^-3");
    }

    #[test]
    fn generating_function() {
        let c = LoopConformal::new(LieAlgebra::sl2());
        let (checked, bad) = loop_generating_check(&c, 4);
        assert!(checked > 0);
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn rejects_non_lie_tables() {
        let table = vec![vec![LinComb::single(0usize)]];
        assert!(LieAlgebra::new(vec!["x".into()], table).is_err());
    }

    #[test]
    fn free_module_round_trip() {
        let c = LoopConformal::new(LieAlgebra::sl2());
        let mut e = c.basis(0, 3);
        e.axpy(&int(5), &c.basis(2, 1));
        e.axpy(&int(-2), &c.basis(1, 4));
        assert_eq!(c.free_expand(&c.free_decompose(&e)), e);
    }
}
