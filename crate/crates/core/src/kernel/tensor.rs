use super::{Coeff, Matrix, Scalar};

/// Element of `V ⊗ V`: entry `(i, j)` is the coefficient of `e_i ⊗ e_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor2<T = Scalar>(Matrix<T>);

impl<T: Coeff> Tensor2<T> {
    pub fn zeros(n: usize) -> Self {
        Tensor2(Matrix::zeros(n, n))
    }

    pub fn from_matrix(m: Matrix<T>) -> Self {
        assert!(m.is_square(), "tensor coefficients must be square");
        Tensor2(m)
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> T) -> Self {
        Tensor2(Matrix::from_fn(n, n, f))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        self.0.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.0.set(i, j, v);
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut T {
        self.0.entry_mut(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The flip `τ(x ⊗ y) = y ⊗ x`.
    pub fn flip(&self) -> Self {
        Tensor2(self.0.transpose())
    }

    pub fn add(&self, o: &Self) -> Self {
        Tensor2(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Tensor2(self.0.sub(&o.0))
    }

    pub fn neg(&self) -> Self {
        Tensor2(self.0.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Tensor2(self.0.scale(s))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let n = self.dim();
        self.0
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / n, k % n, v))
    }
}

impl<T: Coeff> Tensor2<T> {
    /// `(M ⊗ N)(t)`, i.e. `M · T · Nᵀ` on coefficient matrices.
    pub fn apply_pair(&self, m: &Matrix<T>, n: &Matrix<T>) -> Self {
        Tensor2(m.mul(&self.0).mul(&n.transpose()))
    }

    /// `(M ⊗ id)(t)`.
    pub fn apply_left(&self, m: &Matrix<T>) -> Self {
        Tensor2(m.mul(&self.0))
    }

    /// `(id ⊗ N)(t)`.
    pub fn apply_right(&self, n: &Matrix<T>) -> Self {
        Tensor2(self.0.mul(&n.transpose()))
    }
}

/// Element of `V ⊗ V ⊗ V`: entry `(i, j, k)` is the coefficient of `e_i ⊗ e_j ⊗ e_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3<T = Scalar> {
    n: usize,
    data: Vec<T>,
}

impl<T: Coeff> Tensor3<T> {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![T::zero(); n * n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        let at = self.idx(i, j, k);
        self.data[at] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize, k: usize) -> &mut T {
        let at = self.idx(i, j, k);
        &mut self.data[at]
    }

    /// The `n` coefficients of `e_i ⊗ e_j ⊗ (·)`.
    pub fn fiber(&self, i: usize, j: usize) -> &[T] {
        let at = self.idx(i, j, 0);
        &self.data[at..at + self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        Tensor3 {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        Tensor3 {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.sub_ref(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Tensor3 {
            n: self.n,
            data: self.data.iter().map(T::neg_ref).collect(),
        }
    }

    /// `τ ⊗ id`.
    pub fn swap12(&self) -> Self {
        Tensor3::from_fn(self.n, |i, j, k| self.get(j, i, k).clone())
    }

    /// `id ⊗ τ`.
    pub fn swap23(&self) -> Self {
        Tensor3::from_fn(self.n, |i, j, k| self.get(i, k, j).clone())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(at, v)| ((at / (n * n), (at / n) % n, at % n), v))
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl Tensor2<Scalar> {
    pub fn to_poly(&self) -> Tensor2<super::Poly> {
        Tensor2(self.0.to_poly())
    }
}
