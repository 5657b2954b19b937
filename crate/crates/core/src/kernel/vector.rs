//! Constant-coefficient frame vectors, stored as plain component lists.

use num_traits::Zero;

use super::rat::{self, Rat};

pub type Vector = Vec<Rat>;

pub fn zeros(dim: usize) -> Vector {
    vec![Rat::zero(); dim]
}

/// The frame vector `e_{i+1}` (internal indices are 0-based).
pub fn basis(dim: usize, i: usize) -> Vector {
    let mut v = zeros(dim);
    v[i] = rat::one();
    v
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rat, a: &[Rat]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// `acc += c * a`
pub fn axpy(acc: &mut [Rat], c: &Rat, a: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

pub fn is_zero(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Human-readable linear combination such as `2e3 - (1/2)e5`.
pub fn render(a: &[Rat]) -> String {
    let mut out = String::new();
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rat::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != rat::one() {
            out.push_str(&rat::render_grouped(&mag));
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat::{frac, int};

    #[test]
    fn render_combination() {
        assert_eq!(render(&[int(0), int(2), int(0)]), "2e2");
        assert_eq!(render(&[int(-1), int(0), frac(-1, 2)]), "-e1 - (1/2)e3");
        assert_eq!(render(&zeros(3)), "0");
    }
}
