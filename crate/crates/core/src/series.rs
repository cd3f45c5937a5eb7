//! Truncated integer power series, enough for the dimension generating
//! functions: products of `(1 + t^a)` and geometric factors `1/(1 - t^b)`.

/// Coefficients `c_0..c_max` of a truncated series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Truncated {
    pub coeffs: Vec<u64>,
}

impl Truncated {
    pub fn one(max_degree: u32) -> Self {
        let mut coeffs = vec![0; max_degree as usize + 1];
        coeffs[0] = 1;
        Truncated { coeffs }
    }

    /// Multiplies by `(1 + t^a)`, `a ≥ 1`.
    pub fn mul_one_plus(&mut self, a: u32) {
        let a = a as usize;
        for i in (0..self.coeffs.len()).rev() {
            if i >= a {
                self.coeffs[i] += self.coeffs[i - a];
            }
        }
    }

    /// Multiplies by `1/(1 - t^b) = 1 + t^b + t^{2b} + …`, `b ≥ 1`.
    pub fn mul_geometric(&mut self, b: u32) {
        let b = b as usize;
        for i in b..self.coeffs.len() {
            self.coeffs[i] += self.coeffs[i - b];
        }
    }

    pub fn coeff(&self, i: u32) -> u64 {
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_cube() {
        let mut s = Truncated::one(4);
        for _ in 0..3 {
            s.mul_one_plus(1);
        }
        assert_eq!(s.coeffs, vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn geometric_inverse() {
        // (1 - t^2) * 1/(1 - t^2) = 1
        let mut s = Truncated::one(6);
        s.mul_geometric(2);
        assert_eq!(s.coeffs, vec![1, 0, 1, 0, 1, 0, 1]);
    }
}
