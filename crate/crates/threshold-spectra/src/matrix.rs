//! Dense symmetric matrices over exact rationals.

use num::Zero;

use crate::rational::{to_f64, Rational};

/// Row-major dense symmetric matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl SquareMatrix {
    pub fn zero(order: usize) -> Self {
        SquareMatrix {
            order,
            entries: vec![Rational::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.order + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, delta: &Rational) {
        self.entries[i * self.order + j] += delta;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.order).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        (0..self.order).fold(Rational::zero(), |acc, j| acc + self.get(i, j))
    }

    /// Float view, row-major. Only the numeric oracle consumes this.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| to_f64(self.get(i, j))).collect())
            .collect()
    }
}
