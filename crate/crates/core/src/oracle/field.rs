//! Finite fields `F_q` and `F_{q^2}` for small primes `q`, by explicit
//! arithmetic on residues.

/// `F_{q^d}` with `d ∈ {1, 2}`. Elements are packed as `a + b·q`, standing
/// for `a + b·x` where `x² + c1·x + c0 = 0`.
#[derive(Debug, Clone, Copy)]
pub struct SmallField {
    q: u64,
    degree: u32,
    c1: u64,
    c0: u64,
}

impl SmallField {
    pub fn prime(q: u64) -> Self {
        SmallField {
            q,
            degree: 1,
            c1: 0,
            c0: 0,
        }
    }

    /// `F_q[x] / (x² + c1 x + c0)` for the first monic quadratic without a
    /// root in `F_q`.
    pub fn quadratic(q: u64) -> Self {
        let (c1, c0) = (0..q)
            .flat_map(|c1| (0..q).map(move |c0| (c1, c0)))
            .find(|&(c1, c0)| (0..q).all(|x| (x * x + c1 * x + c0) % q != 0))
            .expect("every prime field has an irreducible quadratic");
        SmallField {
            q,
            degree: 2,
            c1,
            c0,
        }
    }

    pub fn size(&self) -> u64 {
        self.q.pow(self.degree)
    }

    fn split(&self, e: u64) -> (u64, u64) {
        (e % self.q, e / self.q)
    }

    fn pack(&self, a: u64, b: u64) -> u64 {
        a + b * self.q
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        let q = self.q;
        let (a, b) = self.split(x);
        let (c, d) = self.split(y);
        self.pack((a + q - c) % q, (b + q - d) % q)
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let q = self.q;
        let (a, b) = self.split(x);
        let (c, d) = self.split(y);
        // (a + bx)(c + dx) = ac + (ad + bc)x + bd x², x² = -c1 x - c0
        let bd = b * d % q;
        let constant = (a * c + (q - self.c0) * bd) % q;
        let linear = (a * d + b * c + (q - self.c1) * bd) % q;
        self.pack(constant, linear)
    }
}
