use num_complex::Complex64;

/// Neumaier's improved Kahan summation with a running rounding-error bound.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
    abs: f64,
    n: u64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    /// An accumulator holding `value` with no pending compensation.
    pub fn seeded(value: f64, abs: f64, n: u64) -> Self {
        Self { sum: value, comp: 0.0, abs, n }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
        self.n += 1;
    }

    /// Folds another accumulator in; used for ordered block reductions.
    pub fn merge(&mut self, other: &Neumaier) {
        let (abs, n) = (self.abs + other.abs, self.n + other.n);
        self.add(other.sum);
        self.add(other.comp);
        self.abs = abs;
        self.n = n;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Σ|x| over the summands seen.
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }

    pub fn count(&self) -> u64 {
        self.n
    }

    /// A posteriori bound on |computed - exact| for the summands seen.
    pub fn error_bound(&self) -> f64 {
        let eps = f64::EPSILON / 2.0;
        2.0 * eps * self.value().abs() + 2.0 * (self.n as f64) * eps * eps * self.abs
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexNeumaier {
    pub re: Neumaier,
    pub im: Neumaier,
}

impl ComplexNeumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn merge(&mut self, other: &ComplexNeumaier) {
        self.re.merge(&other.re);
        self.im.merge(&other.im);
    }

    pub fn abs_sum(&self) -> f64 {
        self.re.abs_sum() + self.im.abs_sum()
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    pub fn error_bound(&self) -> f64 {
        self.re.error_bound().hypot(self.im.error_bound())
    }
}
