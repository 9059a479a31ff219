//! Dense polynomials in one variable with exact rational coefficients,
//! coefficients stored in ascending order.

use num_traits::{One, Zero};

use crate::arith::ExactRational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(pub Vec<ExactRational>);

impl Poly {
    pub fn constant(c: ExactRational) -> Poly {
        Poly(vec![c]).trimmed()
    }

    /// `∏ (k + a_j)`.
    pub fn from_shifts(shifts: &[ExactRational]) -> Poly {
        shifts.iter().fold(Poly::constant(ExactRational::one()), |acc, a| {
            acc.mul(&Poly(vec![a.clone(), ExactRational::one()]))
        })
    }

    fn trimmed(mut self) -> Poly {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> ExactRational {
        self.0.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn eval(&self, k: &ExactRational) -> ExactRational {
        self.0.iter().rev().fold(ExactRational::zero(), |acc, c| acc * k + c)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect()).trimmed()
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.0.len().max(rhs.0.len());
        Poly((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect()).trimmed()
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Poly::default();
        }
        let mut out = vec![ExactRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    pub fn scale(&self, c: &ExactRational) -> Poly {
        Poly(self.0.iter().map(|a| a * c).collect()).trimmed()
    }

    /// The unique polynomial of degree `< values.len()` through
    /// `(j, values[j])` for `j = 0, 1, …`, via Newton divided differences.
    pub fn interpolate_at_naturals(values: &[ExactRational]) -> Poly {
        let n = values.len();
        let mut diffs = values.to_vec();
        let mut newton = Vec::with_capacity(n);
        for order in 0..n {
            newton.push(diffs[0].clone());
            let denom = ExactRational::from_integer((order as i64 + 1).into());
            diffs = diffs.windows(2).map(|w| (&w[1] - &w[0]) / &denom).collect();
        }
        // Σ c_j ∏_{i<j} (k − i), expanded by Horner from the top
        let mut out = Poly::default();
        for (j, c) in newton.iter().enumerate().rev() {
            let root = ExactRational::from_integer((-(j as i64)).into());
            out = out.mul(&Poly(vec![root, ExactRational::one()])).add(&Poly::constant(c.clone()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, ratio};

    #[test]
    fn products_and_interpolation() {
        // (k + 1/2)^2 = k^2 + k + 1/4
        let sq = Poly::from_shifts(&[ratio(1, 2), ratio(1, 2)]);
        assert_eq!(sq, Poly(vec![ratio(1, 4), int(1), int(1)]));
        let values: Vec<_> = (0..5).map(|k| sq.eval(&int(k))).collect();
        assert_eq!(Poly::interpolate_at_naturals(&values), sq);
        assert_eq!(sq.sub(&sq).degree(), None);
    }
}
