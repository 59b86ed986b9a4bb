//! Finite-dimensional commutative algebras over F₂, F₃, F₄ and F₅ given by
//! structure constants, with an exhaustive quadratic-extension test and the
//! five-way classification of quadratic algebras.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on `q^d` for exhaustive element enumeration.
pub const MAX_ELEMENTS: u64 = 10_000;

/// One of the supported small fields. Elements are `0..q`; for F₄ the element
/// `a + 2b` stands for `a + bω` with `ω² = ω + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisField {
    F2,
    F3,
    F4,
    F5,
}

const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl GaloisField {
    pub fn from_order(q: u32) -> Result<Self> {
        match q {
            2 => Ok(GaloisField::F2),
            3 => Ok(GaloisField::F3),
            4 => Ok(GaloisField::F4),
            5 => Ok(GaloisField::F5),
            _ => Err(Error::UnsupportedField(format!("F{q}"))),
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "F2" => Ok(GaloisField::F2),
            "F3" => Ok(GaloisField::F3),
            "F4" => Ok(GaloisField::F4),
            "F5" => Ok(GaloisField::F5),
            other => Err(Error::UnsupportedField(other.to_string())),
        }
    }

    pub fn order(self) -> u8 {
        match self {
            GaloisField::F2 => 2,
            GaloisField::F3 => 3,
            GaloisField::F4 => 4,
            GaloisField::F5 => 5,
        }
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            GaloisField::F4 => a ^ b,
            _ => (a + b) % self.order(),
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self {
            GaloisField::F2 | GaloisField::F4 => a,
            _ => (self.order() - a) % self.order(),
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            GaloisField::F4 => F4_MUL[a as usize][b as usize],
            _ => (a * b) % self.order(),
        }
    }

    pub fn inv(self, a: u8) -> Option<u8> {
        (1..self.order()).find(|&b| self.mul(a, b) == 1).filter(|_| a != 0)
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.order())
    }
}

/// Commutative unital algebra with basis `e_0 = 1, e_1, …, e_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: GaloisField,
    dim: usize,
    /// `table[i][j]` are the coordinates of `e_i e_j`.
    table: Vec<Vec<Vec<u8>>>,
}

/// On-disk form: `{"field": "F2", "dim": d, "table": [[[c, …]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    pub table: Vec<Vec<Vec<u32>>>,
}

impl StructureAlgebra {
    pub fn from_table(field: GaloisField, dim: usize, table: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadShape("dimension must be at least 1".into()));
        }
        if table.len() != dim
            || table.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(Error::BadShape(format!("table must be {dim}×{dim}×{dim}")));
        }
        let q = field.order();
        if let Some(&bad) = table.iter().flatten().flatten().find(|&&c| c >= q) {
            return Err(Error::InvalidCoefficient {
                value: bad as u32,
                q: q as u32,
            });
        }
        let alg = StructureAlgebra { field, dim, table };
        alg.validate()?;
        Ok(alg)
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let field = GaloisField::parse(&file.field)?;
        let q = field.order() as u32;
        let table = file
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .map(|&c| {
                                if c < q {
                                    Ok(c as u8)
                                } else {
                                    Err(Error::InvalidCoefficient { value: c, q })
                                }
                            })
                            .collect::<Result<Vec<u8>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(field, file.dim, table)
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            field: self.field.to_string(),
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|v| v.iter().map(|&c| c as u32).collect()).collect())
                .collect(),
        }
    }

    fn basis(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    fn validate(&self) -> Result<()> {
        for j in 0..self.dim {
            if self.table[0][j] != self.basis(j) {
                return Err(Error::NoIdentity(j));
            }
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.table[i][j] != self.table[j][i] {
                    return Err(Error::NotCommutative(i, j));
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let left = self.mul(&self.table[i][j], &self.basis(k));
                    let right = self.mul(&self.basis(i), &self.table[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> GaloisField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn element_count(&self) -> u64 {
        (self.field.order() as u64).saturating_pow(self.dim as u32)
    }

    pub fn one(&self) -> Vec<u8> {
        self.basis(0)
    }

    pub fn zero(&self) -> Vec<u8> {
        vec![0; self.dim]
    }

    pub fn add(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let f = self.field;
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = f.add(*o, f.mul(c, t));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u8], n: usize) -> Vec<u8> {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    fn check_size(&self) -> Result<()> {
        let n = self.element_count();
        if n > MAX_ELEMENTS {
            Err(Error::TooLarge(n))
        } else {
            Ok(())
        }
    }

    /// All `q^d` elements in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<Vec<u8>> {
        let q = self.field.order();
        let mut out = vec![self.zero()];
        for pos in (0..self.dim).rev() {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..q).map(move |c| {
                        let mut w = v.clone();
                        w[pos] = c;
                        w
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// Every `xy` lies in the span of `1, x, y`.
    pub fn is_quadratic_over_base(&self) -> Result<bool> {
        Ok(self.quadratic_violation()?.is_none())
    }

    /// A pair `(x, y)` with `xy ∉ span{1, x, y}`, if any.
    pub fn quadratic_violation(&self) -> Result<Option<(Vec<u8>, Vec<u8>)>> {
        self.check_size()?;
        let elems = self.elements();
        let one = self.one();
        for (ix, x) in elems.iter().enumerate() {
            for y in &elems[ix..] {
                let xy = self.mul(x, y);
                let base = rank(self.field, &[one.clone(), x.clone(), y.clone()]);
                let ext = rank(self.field, &[one.clone(), x.clone(), y.clone(), xy]);
                if ext > base {
                    return Ok(Some((x.clone(), y.clone())));
                }
            }
        }
        Ok(None)
    }

    fn nilradical(&self, elems: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let zero = self.zero();
        elems
            .iter()
            .filter(|x| self.pow(x, self.dim) == zero)
            .cloned()
            .collect()
    }

    fn idempotents(&self, elems: &[Vec<u8>]) -> Vec<Vec<u8>> {
        elems.iter().filter(|x| &self.mul(x, x) == *x).cloned().collect()
    }

    /// Number of maximal ideals: `A` is a product of `k` local rings and has
    /// exactly `2^k` idempotents.
    pub fn maximal_ideal_count(&self) -> Result<usize> {
        self.check_size()?;
        let idem = self.idempotents(&self.elements()).len();
        Ok(idem.trailing_zeros() as usize)
    }

    pub fn classify_handelman(&self) -> Result<HandelmanClass> {
        if !self.is_quadratic_over_base()? {
            return Ok(HandelmanClass::NotQuadratic);
        }
        if self.dim == 1 {
            return Ok(HandelmanClass::BaseField);
        }
        let elems = self.elements();
        let nil = self.nilradical(&elems);
        let nil_dim = log_base(nil.len(), self.field.order() as usize);
        let local_factors = self.idempotents(&elems).len().trailing_zeros();
        let zero = self.zero();
        match local_factors {
            1 if nil.len() == 1 => {
                let all_units = elems
                    .iter()
                    .filter(|x| **x != zero)
                    .all(|x| elems.iter().any(|y| self.mul(x, y) == self.one()));
                if self.dim == 2 && all_units {
                    Ok(HandelmanClass::QuadraticFieldExtension)
                } else {
                    Err(Error::Unclassifiable)
                }
            }
            1 => {
                let square_zero = nil
                    .iter()
                    .all(|a| nil.iter().all(|b| self.mul(a, b) == zero));
                if square_zero && self.dim - nil_dim == 1 {
                    Ok(HandelmanClass::LocalSquareZeroMax)
                } else {
                    Err(Error::Unclassifiable)
                }
            }
            2 if nil.len() == 1 && self.dim == 2 => Ok(HandelmanClass::FxF),
            3 if nil.len() == 1 && self.dim == 3 && self.field == GaloisField::F2 => {
                Ok(HandelmanClass::FxFxFOverF2)
            }
            _ => Err(Error::Unclassifiable),
        }
    }
}

/// The five shapes a quadratic finite-dimensional algebra can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HandelmanClass {
    BaseField,
    QuadraticFieldExtension,
    LocalSquareZeroMax,
    FxF,
    #[serde(rename = "FxFxF_overF2")]
    FxFxFOverF2,
    NotQuadratic,
}

impl fmt::Display for HandelmanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HandelmanClass::BaseField => "BaseField",
            HandelmanClass::QuadraticFieldExtension => "QuadraticFieldExtension",
            HandelmanClass::LocalSquareZeroMax => "LocalSquareZeroMax",
            HandelmanClass::FxF => "FxF",
            HandelmanClass::FxFxFOverF2 => "FxFxF_overF2",
            HandelmanClass::NotQuadratic => "NotQuadratic",
        };
        f.write_str(s)
    }
}

fn log_base(mut n: usize, q: usize) -> usize {
    let mut k = 0;
    while n > 1 {
        n /= q;
        k += 1;
    }
    k
}

/// Rank of a list of vectors over `field` by Gaussian elimination.
fn rank(field: GaloisField, vectors: &[Vec<u8>]) -> usize {
    let mut rows: Vec<Vec<u8>> = vectors.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]).expect("nonzero");
        let pivot: Vec<u8> = rows[r].iter().map(|&x| field.mul(x, inv)).collect();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[c];
            if f != 0 {
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(f, p));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Ready-made algebras used by tests and the CLI.
pub mod samples {
    use super::*;

    /// `F^n` with coordinatewise multiplication, written in a basis whose
    /// first vector is the identity `(1, …, 1)`.
    pub fn product_of_fields(field: GaloisField, n: usize) -> StructureAlgebra {
        // Basis: e_0 = (1,…,1), e_i = i-th coordinate idempotent for i >= 1,
        // dropping the 0-th coordinate idempotent f_0 = e_0 - Σ e_i.
        // e_i e_j = δ_ij e_i for i, j >= 1.
        let mut table = vec![vec![vec![0u8; n]; n]; n];
        for j in 0..n {
            table[0][j][j] = 1;
            table[j][0][j] = 1;
        }
        for i in 1..n {
            table[i][i][i] = 1;
        }
        StructureAlgebra::from_table(field, n, table).expect("valid product table")
    }

    /// `F[x]/(x²)`.
    pub fn dual_numbers(field: GaloisField) -> StructureAlgebra {
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]];
        StructureAlgebra::from_table(field, 2, table).expect("valid")
    }

    /// F₄ as a 2-dimensional F₂-algebra: `ω² = ω + 1`.
    pub fn f4_over_f2() -> StructureAlgebra {
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]];
        StructureAlgebra::from_table(GaloisField::F2, 2, table).expect("valid")
    }
}

/// Every valid structure table over `field` in dimension `dim`: all choices
/// of the products `e_i e_j` (`1 <= i <= j`) that pass validation.
pub fn enumerate_algebras(field: GaloisField, dim: usize) -> Result<Vec<StructureAlgebra>> {
    let q = field.order() as u64;
    let free_pairs: Vec<(usize, usize)> = (1..dim)
        .flat_map(|i| (i..dim).map(move |j| (i, j)))
        .collect();
    let vectors_per_slot = q.pow(dim as u32);
    let total = vectors_per_slot
        .checked_pow(free_pairs.len() as u32)
        .filter(|&t| t <= 10_000_000)
        .ok_or(Error::TooLarge(u64::MAX))?;
    let decode = |mut code: u64| -> Vec<u8> {
        (0..dim)
            .map(|_| {
                let c = (code % q) as u8;
                code /= q;
                c
            })
            .collect()
    };
    let mut out = Vec::new();
    for mut idx in 0..total {
        let mut table = vec![vec![vec![0u8; dim]; dim]; dim];
        for j in 0..dim {
            table[0][j][j] = 1;
            table[j][0][j] = 1;
        }
        for &(i, j) in &free_pairs {
            let v = decode(idx % vectors_per_slot);
            idx /= vectors_per_slot;
            table[i][j] = v.clone();
            table[j][i] = v;
        }
        if let Ok(a) = StructureAlgebra::from_table(field, dim, table) {
            out.push(a);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::samples::*;
    use super::*;

    #[test]
    fn field_axioms() {
        for f in [GaloisField::F2, GaloisField::F3, GaloisField::F4, GaloisField::F5] {
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn table_validation() {
        let d = dual_numbers(GaloisField::F2);
        assert_eq!(d.dim(), 2);
        let f4 = f4_over_f2();
        let w = vec![0, 1];
        assert_eq!(f4.mul(&w, &w), vec![1, 1]);

        let mut t = vec![vec![vec![0u8; 3]; 3]; 3];
        for j in 0..3 {
            t[0][j][j] = 1;
            t[j][0][j] = 1;
        }
        t[1][2] = vec![0, 1, 0];
        t[2][1] = vec![0, 0, 1];
        assert_eq!(
            StructureAlgebra::from_table(GaloisField::F2, 3, t),
            Err(Error::NotCommutative(1, 2))
        );
    }

    #[test]
    fn non_associative_table_is_named() {
        // e1² = e2, e1e2 = 0, e2² = e1: (e1 e1) e2 = e2² = e1 but e1 (e1 e2) = 0.
        let mut t = vec![vec![vec![0u8; 3]; 3]; 3];
        for j in 0..3 {
            t[0][j][j] = 1;
            t[j][0][j] = 1;
        }
        t[1][1] = vec![0, 0, 1];
        t[2][2] = vec![0, 1, 0];
        let err = StructureAlgebra::from_table(GaloisField::F2, 3, t).unwrap_err();
        assert_eq!(err, Error::NotAssociative(1, 1, 2));
        assert_eq!(err.to_string(), "NotAssociative at (i,j,k)=(1,1,2)");
    }

    #[test]
    fn missing_identity_and_bad_coefficients() {
        let t = vec![vec![vec![1, 0], vec![1, 1]], vec![vec![0, 1], vec![0, 0]]];
        assert_eq!(
            StructureAlgebra::from_table(GaloisField::F2, 2, t),
            Err(Error::NoIdentity(1))
        );
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 2]]];
        assert!(matches!(
            StructureAlgebra::from_table(GaloisField::F2, 2, t),
            Err(Error::InvalidCoefficient { value: 2, q: 2 })
        ));
        assert!(matches!(GaloisField::parse("F7"), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn quadratic_examples() {
        assert!(product_of_fields(GaloisField::F2, 3).is_quadratic_over_base().unwrap());
        assert!(!product_of_fields(GaloisField::F3, 3).is_quadratic_over_base().unwrap());
        assert!(product_of_fields(GaloisField::F5, 1).is_quadratic_over_base().unwrap());
    }

    #[test]
    fn classification_examples() {
        use HandelmanClass::*;
        assert_eq!(dual_numbers(GaloisField::F2).classify_handelman().unwrap(), LocalSquareZeroMax);
        assert_eq!(f4_over_f2().classify_handelman().unwrap(), QuadraticFieldExtension);
        assert_eq!(
            product_of_fields(GaloisField::F2, 3).classify_handelman().unwrap(),
            FxFxFOverF2
        );
        assert_eq!(product_of_fields(GaloisField::F3, 2).classify_handelman().unwrap(), FxF);
        assert_eq!(product_of_fields(GaloisField::F4, 1).classify_handelman().unwrap(), BaseField);
        assert_eq!(
            product_of_fields(GaloisField::F3, 3).classify_handelman().unwrap(),
            NotQuadratic
        );
    }

    #[test]
    fn maximal_ideals() {
        assert_eq!(product_of_fields(GaloisField::F2, 3).maximal_ideal_count().unwrap(), 3);
        assert_eq!(dual_numbers(GaloisField::F2).maximal_ideal_count().unwrap(), 1);
        assert_eq!(f4_over_f2().maximal_ideal_count().unwrap(), 1);
    }

    #[test]
    fn too_large() {
        let a = product_of_fields(GaloisField::F5, 6);
        assert_eq!(a.is_quadratic_over_base(), Err(Error::TooLarge(15625)));
    }

    #[test]
    fn file_roundtrip() {
        let a = product_of_fields(GaloisField::F3, 2);
        let json = serde_json::to_string(&a.to_file()).unwrap();
        let back: AlgebraFile = serde_json::from_str(&json).unwrap();
        assert_eq!(StructureAlgebra::from_file(&back).unwrap(), a);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_algebras(GaloisField::F2, 1).unwrap().len(), 1);
        // Every choice of e1² gives an associative algebra F2[x]/(x² - ax - b).
        assert_eq!(enumerate_algebras(GaloisField::F2, 2).unwrap().len(), 4);
    }
}
