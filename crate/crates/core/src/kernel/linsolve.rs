//! Exact linear systems over `Rat`.

use num_traits::Zero;

use super::rat::Rat;

/// Rows of `coefficients . x = rhs` over named unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    unknowns: Vec<String>,
    rows: Vec<(Vec<Rat>, Rat)>,
}

impl LinearSystem {
    pub fn new<S: Into<String>>(unknowns: impl IntoIterator<Item = S>) -> Self {
        Self {
            unknowns: unknowns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a row. Panics if the coefficient count does not match the
    /// number of unknowns.
    pub fn push(&mut self, coefficients: Vec<Rat>, rhs: Rat) {
        assert_eq!(
            coefficients.len(),
            self.unknowns.len(),
            "row has {} coefficients for {} unknowns",
            coefficients.len(),
            self.unknowns.len()
        );
        self.rows.push((coefficients, rhs));
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn rows(&self) -> &[(Vec<Rat>, Rat)] {
        &self.rows
    }
}

/// Solution family `particular + sum_f t_f * directions[f]`, one free
/// parameter per entry of `free`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parametric {
    pub particular: Vec<Rat>,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    pub directions: Vec<Vec<Rat>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rat>),
    Underdetermined(Parametric),
    Inconsistent,
}

/// Gauss-Jordan elimination to reduced row echelon form.
pub fn solve_exact(sys: &LinearSystem) -> Solution {
    let cols = sys.unknowns.len();
    let mut a: Vec<Vec<Rat>> = sys
        .rows
        .iter()
        .map(|(c, r)| {
            let mut row = c.clone();
            row.push(r.clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(p) = (next..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(next, p);
        let inv = a[next][col].recip();
        for x in a[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[next].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, q) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * q;
            }
        }
        pivots.push(col);
        next += 1;
    }

    if a[next..].iter().any(|row| !row[cols].is_zero()) {
        return Solution::Inconsistent;
    }

    let mut particular = vec![Rat::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = a[r][cols].clone();
    }
    if pivots.len() == cols {
        return Solution::Unique(particular);
    }

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let directions = free
        .iter()
        .map(|&f| {
            let mut d = vec![Rat::zero(); cols];
            d[f] = super::rat::one();
            for (r, &c) in pivots.iter().enumerate() {
                d[c] = -a[r][f].clone();
            }
            d
        })
        .collect();
    Solution::Underdetermined(Parametric {
        particular,
        pivots,
        free,
        directions,
    })
}
