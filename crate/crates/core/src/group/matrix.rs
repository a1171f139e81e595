use std::fmt;

use num_traits::Zero;

use crate::series::Rat;

/// A lower-triangular matrix with exact entries, stored row by row; row `n`
/// holds `a_{n,0..=n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix {
    rows: Vec<Vec<Rat>>,
}

impl CoeffMatrix {
    /// Panics unless row `n` has exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} of a lower-triangular matrix needs {} entries", n + 1);
        }
        CoeffMatrix { rows }
    }

    /// Reads the lower triangle of a square integer array.
    pub fn from_square_ints(square: &[&[i64]]) -> Self {
        Self::from_rows(
            square
                .iter()
                .enumerate()
                .map(|(n, row)| row[..=n].iter().map(|&v| crate::series::rat(v)).collect())
                .collect(),
        )
    }

    /// Reads rows of a lower triangle given as integer slices.
    pub fn from_triangle_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| crate::series::rat(v)).collect())
                .collect(),
        )
    }

    pub fn identity(size: usize) -> Self {
        Self::from_rows(
            (0..size)
                .map(|n| (0..=n).map(|k| if k == n { crate::series::rat(1) } else { Rat::zero() }).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `a_{n,k}`, zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> Rat {
        if k > n {
            Rat::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn column(&self, k: usize) -> Vec<Rat> {
        (0..self.size()).map(|n| self.get(n, k)).collect()
    }

    /// The leading `size x size` block.
    pub fn truncate(&self, size: usize) -> CoeffMatrix {
        CoeffMatrix { rows: self.rows[..size.min(self.size())].to_vec() }
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.is_integer())
    }

    /// Exact product of two lower-triangular matrices of the same size.
    pub fn mul(&self, other: &CoeffMatrix) -> CoeffMatrix {
        assert_eq!(self.size(), other.size(), "matrix sizes differ");
        let rows = (0..self.size())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (k..=n).fold(Rat::zero(), |acc, j| {
                            let a = &self.rows[n][j];
                            let b = &other.rows[j][k];
                            if a.is_zero() || b.is_zero() {
                                acc
                            } else {
                                acc + a * b
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        CoeffMatrix { rows }
    }

    /// Matrix times column vector; entries of `v` beyond its length count as
    /// absent, so `v` must have at least `size()` entries.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert!(v.len() >= self.size(), "vector shorter than the matrix");
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn row_sums(&self) -> Vec<Rat> {
        self.rows.iter().map(|row| row.iter().sum()).collect()
    }

    /// `sum_k a_{n-k,k}` for each `n < size()`.
    pub fn diagonal_sums(&self) -> Vec<Rat> {
        (0..self.size())
            .map(|n| (0..=n / 2).map(|k| self.get(n - k, k)).sum())
            .collect()
    }
}

/// Square layout with right-aligned columns, zeros written out above the
/// diagonal, one row per line.
impl fmt::Display for CoeffMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.size();
        let cells: Vec<Vec<String>> = (0..size)
            .map(|n| (0..size).map(|k| self.get(n, k).to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn identity_is_neutral() {
        let a = CoeffMatrix::from_square_ints(&[&[1, 0, 0], &[2, 1, 0], &[3, 4, 1]]);
        assert_eq!(a.mul(&CoeffMatrix::identity(3)), a);
        assert_eq!(CoeffMatrix::identity(3).mul(&a), a);
    }

    #[test]
    fn product_and_sums() {
        let a = CoeffMatrix::from_square_ints(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]);
        let sq = a.mul(&a);
        assert_eq!(sq, CoeffMatrix::from_square_ints(&[&[1, 0, 0], &[2, 1, 0], &[4, 4, 1]]));
        assert_eq!(a.row_sums(), vec![rat(1), rat(2), rat(4)]);
        assert_eq!(a.diagonal_sums(), vec![rat(1), rat(1), rat(2)]);
        assert_eq!(a.apply(&[rat(1), rat(0), rat(1)]), vec![rat(1), rat(1), rat(2)]);
    }

    #[test]
    fn display_aligns_columns() {
        let a = CoeffMatrix::from_square_ints(&[&[1, 0], &[-12, 1]]);
        assert_eq!(a.to_string(), "  1   0\n-12   1\n");
    }
}
