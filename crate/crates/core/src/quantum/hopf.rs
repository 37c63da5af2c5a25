//! Hopf structure of su_q(2) on generators: formal words in the generators,
//! their tensor powers, and the coproduct, counit and antipode acting on them.
//! Identities are compared both as formal sums and as matrices in small
//! representations.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rep::{inverse_t_difference, matrix_report, rep_generators, SuqGenerators};
use crate::algebra::IdentityReport;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::scalar::{QRadical, Scalar};
use crate::wigner::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    H,
    Jp,
    Jm,
    /// `t^H`.
    K,
    /// `t^-H`.
    Kinv,
}

impl Gen {
    pub const ALL: [Gen; 5] = [Gen::H, Gen::Jp, Gen::Jm, Gen::K, Gen::Kinv];

    fn image(self, rep: &SuqGenerators) -> &Matrix<QRadical> {
        match self {
            Gen::H => &rep.h,
            Gen::Jp => &rep.jp,
            Gen::Jm => &rep.jm,
            Gen::K => &rep.k,
            Gen::Kinv => &rep.kinv,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gen::H => "H",
            Gen::Jp => "J+",
            Gen::Jm => "J-",
            Gen::K => "t^H",
            Gen::Kinv => "t^-H",
        })
    }
}

pub type Word = Vec<Gen>;

fn render_word(w: &[Gen]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(Gen::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// Finite sum of `c * (w_1 (x) ... (x) w_n)` with words `w_i` in the
/// generators. A single factor is an element of the free algebra; zero factors
/// is a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Word>, QRadical>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(words: Vec<Word>, c: QRadical) -> Self {
        let mut out = Self::zero(words.len());
        out.add_term(words, c);
        out
    }

    pub fn scalar(c: QRadical) -> Self {
        Self::term(vec![], c)
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(vec![vec![g]], QRadical::one())
    }

    pub fn unit(arity: usize) -> Self {
        Self::term(vec![vec![]; arity], QRadical::one())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &QRadical)> {
        self.terms.iter()
    }

    fn add_term(&mut self, words: Vec<Word>, c: QRadical) {
        assert_eq!(words.len(), self.arity, "tensor arity");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(words).or_insert_with(QRadical::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &QRadical) -> Self {
        let mut out = Self::zero(self.arity);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-QRadical::one()))
    }

    /// Factorwise product `(a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "tensor arity");
        let mut out = Self::zero(self.arity);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let words = wa
                    .iter()
                    .zip(wb)
                    .map(|(x, y)| x.iter().chain(y).copied().collect())
                    .collect();
                out.add_term(words, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// `self (x) other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity + other.arity);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.iter().chain(wb).cloned().collect(), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Replaces the word in factor `pos` by `f(word)`, a tensor of any arity
    /// spliced in at that position.
    pub fn map_factor(&self, pos: usize, f: impl Fn(&[Gen]) -> Tensor) -> Self {
        assert!(pos < self.arity, "factor out of range");
        let mut out: Option<Tensor> = None;
        for (words, c) in &self.terms {
            let before = Tensor::term(words[..pos].to_vec(), c.clone());
            let after = Tensor::term(words[pos + 1..].to_vec(), QRadical::one());
            let piece = before.concat(&f(&words[pos])).concat(&after);
            out = Some(match out {
                Some(acc) => acc.add(&piece),
                None => piece,
            });
        }
        out.unwrap_or_else(|| {
            let arity = self.arity - 1 + f(&[]).arity;
            Tensor::zero(arity)
        })
    }

    /// Exchanges the two factors of a 2-tensor.
    pub fn swap(&self) -> Self {
        assert_eq!(self.arity, 2, "swap needs two factors");
        let mut out = Self::zero(2);
        for (w, c) in &self.terms {
            out.add_term(vec![w[1].clone(), w[0].clone()], c.clone());
        }
        out
    }

    /// The operator on `V_1 (x) ... (x) V_n` with factor `i` acting through
    /// `reps[i]`.
    pub fn evaluate(&self, reps: &[&SuqGenerators]) -> Matrix<QRadical> {
        assert_eq!(reps.len(), self.arity, "one representation per factor");
        let dim: usize = reps.iter().map(|r| r.dim()).product();
        let mut out = Matrix::zeros(dim, dim);
        for (words, c) in &self.terms {
            let mut op = Matrix::identity(1);
            for (w, rep) in words.iter().zip(reps) {
                let mut m = rep.identity();
                for g in w {
                    m = m.mul(g.image(rep));
                }
                op = op.kron(&m);
            }
            out = out.add(&op.scale(c));
        }
        out
    }

    /// The coefficient of a 0-factor tensor.
    pub fn as_scalar(&self) -> QRadical {
        assert_eq!(self.arity, 0, "not a scalar");
        self.terms.get(&vec![]).cloned().unwrap_or_else(QRadical::zero)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let body = w.iter().map(|x| render_word(x)).collect::<Vec<_>>().join(" (x) ");
                format!("({c}) {body}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Product of `f(g)` over the letters of a word, in order (or reversed), in
/// the tensor algebra of the given arity.
fn extend_multiplicatively(w: &[Gen], arity: usize, reverse: bool, f: impl Fn(Gen) -> Tensor) -> Tensor {
    let mut out = Tensor::unit(arity);
    let letters: Box<dyn Iterator<Item = &Gen>> = if reverse {
        Box::new(w.iter().rev())
    } else {
        Box::new(w.iter())
    };
    for g in letters {
        out = out.mul(&f(*g));
    }
    out
}

/// `Delta(g)` on a generator.
pub fn coproduct_gen(g: Gen) -> Tensor {
    let one = QRadical::one();
    let t = |a: &[Gen], b: &[Gen]| Tensor::term(vec![a.to_vec(), b.to_vec()], one.clone());
    match g {
        Gen::H => t(&[], &[Gen::H]).add(&t(&[Gen::H], &[])),
        Gen::Jp => t(&[Gen::Kinv], &[Gen::Jp]).add(&t(&[Gen::Jp], &[Gen::K])),
        Gen::Jm => t(&[Gen::Kinv], &[Gen::Jm]).add(&t(&[Gen::Jm], &[Gen::K])),
        Gen::K => t(&[Gen::K], &[Gen::K]),
        Gen::Kinv => t(&[Gen::Kinv], &[Gen::Kinv]),
    }
}

/// `Delta` on a word: an algebra morphism into the 2-fold tensor product.
pub fn coproduct_word(w: &[Gen]) -> Tensor {
    extend_multiplicatively(w, 2, false, coproduct_gen)
}

pub fn counit_gen(g: Gen) -> QRadical {
    match g {
        Gen::H | Gen::Jp | Gen::Jm => QRadical::zero(),
        Gen::K | Gen::Kinv => QRadical::one(),
    }
}

/// `epsilon` on a word, as a 0-factor tensor.
pub fn counit_word(w: &[Gen]) -> Tensor {
    Tensor::scalar(w.iter().fold(QRadical::one(), |acc, g| acc * counit_gen(*g)))
}

/// Antipode `S(J+) = plus J+`, `S(J-) = minus J-`, `S(H) = -H`,
/// `S(t^(+-H)) = t^(-+H)`, extended as an anti-morphism.
#[derive(Clone, Debug, PartialEq)]
pub struct Antipode {
    pub plus: QRadical,
    pub minus: QRadical,
}

impl Antipode {
    /// `S(J+-) = -t^(+-2) J+-`.
    pub fn squared_scaling() -> Self {
        Self {
            plus: -QRadical::t_pow(2),
            minus: -QRadical::t_pow(-2),
        }
    }

    /// `S(J+-) = -t^(+-1) J+-`, the scaling for which `m (S (x) id) Delta = epsilon`.
    pub fn convolution_inverse() -> Self {
        Self {
            plus: -QRadical::t_pow(1),
            minus: -QRadical::t_pow(-1),
        }
    }

    pub fn gen(&self, g: Gen) -> Tensor {
        match g {
            Gen::H => Tensor::gen(Gen::H).scale(&-QRadical::one()),
            Gen::Jp => Tensor::gen(Gen::Jp).scale(&self.plus),
            Gen::Jm => Tensor::gen(Gen::Jm).scale(&self.minus),
            Gen::K => Tensor::gen(Gen::Kinv),
            Gen::Kinv => Tensor::gen(Gen::K),
        }
    }

    pub fn word(&self, w: &[Gen]) -> Tensor {
        extend_multiplicatively(w, 1, true, |g| self.gen(g))
    }

    /// Applies `S` to every factor of a tensor.
    pub fn apply(&self, x: &Tensor) -> Tensor {
        (0..x.arity()).fold(x.clone(), |acc, pos| acc.map_factor(pos, |w| self.word(w)))
    }
}

/// The defining relations as elements of the free algebra, each of which
/// vanishes in su_q(2).
pub fn defining_relations() -> Vec<(String, Tensor)> {
    use Gen::*;
    let w = |letters: &[Gen]| Tensor::term(vec![letters.to_vec()], QRadical::one());
    let t = QRadical::t_pow(1);
    let tinv = QRadical::t_pow(-1);
    let cartan = w(&[K, K]).sub(&w(&[Kinv, Kinv])).scale(&inverse_t_difference());
    vec![
        ("[H,J+] - J+".into(), w(&[H, Jp]).sub(&w(&[Jp, H])).sub(&w(&[Jp]))),
        ("[H,J-] + J-".into(), w(&[H, Jm]).sub(&w(&[Jm, H])).add(&w(&[Jm]))),
        ("[J+,J-] - [2H]".into(), w(&[Jp, Jm]).sub(&w(&[Jm, Jp])).sub(&cartan)),
        ("t^H t^-H - 1".into(), w(&[K, Kinv]).sub(&w(&[]))),
        ("t^-H t^H - 1".into(), w(&[Kinv, K]).sub(&w(&[]))),
        ("[H,t^H]".into(), w(&[H, K]).sub(&w(&[K, H]))),
        ("t^H J+ t^-H - t J+".into(), w(&[K, Jp, Kinv]).sub(&w(&[Jp]).scale(&t))),
        (
            "t^H J- t^-H - J-/t".into(),
            w(&[K, Jm, Kinv]).sub(&w(&[Jm]).scale(&tinv)),
        ),
    ]
}

/// Compares two tensors formally and as operators on the given
/// representations; a mismatch of either kind is a failure.
fn compare(label: String, lhs: &Tensor, rhs: &Tensor, reps: &[Vec<&SuqGenerators>]) -> Vec<(String, Matrix<QRadical>)> {
    let diff = lhs.sub(rhs);
    let mut out = Vec::new();
    if !diff.is_zero() {
        // a formal difference is reported as a 1x1 residual carrying its size
        let mut m = Matrix::zeros(1, 1);
        m.set(0, 0, QRadical::from_i64(diff.terms.len() as i64));
        out.push((format!("{label} (formal: {diff})"), m));
    }
    for r in reps {
        out.push((label.clone(), diff.evaluate(r)));
    }
    out
}

fn formal(g: Gen) -> Tensor {
    Tensor::gen(g)
}

/// `(Delta (x) id) Delta = (id (x) Delta) Delta` on every generator, formally and
/// on `V_(1/2)` cubed.
pub fn check_coassociativity(reps: &HopfReps) -> IdentityReport {
    let mut residuals = Vec::new();
    for g in Gen::ALL {
        let d = coproduct_gen(g);
        let left = d.map_factor(0, coproduct_word);
        let right = d.map_factor(1, coproduct_word);
        residuals.extend(compare(format!("{g}"), &left, &right, &[reps.cube()]));
    }
    matrix_report("hopf_coassociativity", &residuals)
}

/// `(epsilon (x) id) Delta = id = (id (x) epsilon) Delta` on every generator,
/// formally and on `V_(1/2)` and `V_1`.
pub fn check_counit(reps: &HopfReps) -> IdentityReport {
    let mut residuals = Vec::new();
    for g in Gen::ALL {
        let d = coproduct_gen(g);
        let singles = reps.singles();
        residuals.extend(compare(
            format!("left {g}"),
            &d.map_factor(0, counit_word),
            &formal(g),
            &singles,
        ));
        residuals.extend(compare(
            format!("right {g}"),
            &d.map_factor(1, counit_word),
            &formal(g),
            &singles,
        ));
    }
    matrix_report("hopf_counit", &residuals)
}

/// `S` maps each defining relation to an element vanishing in the
/// representation, i.e. the relations of the opposite algebra hold for the
/// `S`-images, on `V_(1/2)` and `V_1`.
pub fn check_antipode_relations(s: &Antipode, reps: &HopfReps) -> IdentityReport {
    let mut residuals = Vec::new();
    for (name, rel) in defining_relations() {
        let image = s.apply(&rel);
        for r in reps.singles() {
            residuals.push((format!("S({name})"), image.evaluate(&r)));
        }
    }
    matrix_report("hopf_antipode_relations", &residuals)
}

/// `epsilon(S(g)) = epsilon(g)` on every generator.
pub fn check_counit_antipode(s: &Antipode) -> IdentityReport {
    let mut residuals = Vec::new();
    for g in Gen::ALL {
        let lhs = s.gen(g).map_factor(0, counit_word).as_scalar();
        let diff = lhs - counit_gen(g);
        let mut m = Matrix::zeros(1, 1);
        m.set(0, 0, diff);
        residuals.push((format!("{g}"), m));
    }
    matrix_report("hopf_counit_antipode", &residuals)
}

/// `swap (S (x) S) Delta = Delta S` on every generator, formally and on
/// `V_(1/2) (x) V_1`.
pub fn check_antipode_coproduct(s: &Antipode, reps: &HopfReps) -> IdentityReport {
    let mut residuals = Vec::new();
    for g in Gen::ALL {
        let lhs = s.apply(&coproduct_gen(g)).swap();
        let rhs = s.gen(g).map_factor(0, coproduct_word);
        residuals.extend(compare(format!("{g}"), &lhs, &rhs, &[reps.mixed_pair()]));
    }
    matrix_report("hopf_antipode_coproduct", &residuals)
}

/// `m (S (x) id) Delta = epsilon 1 = m (id (x) S) Delta` on every generator, on
/// `V_(1/2)` and `V_1`.
pub fn check_antipode_axiom(s: &Antipode, reps: &HopfReps) -> IdentityReport {
    let multiply = |x: &Tensor| {
        // collapse a 2-tensor to a 1-tensor by concatenating the words
        let mut out = Tensor::zero(1);
        for (w, c) in x.terms() {
            let word: Word = w[0].iter().chain(&w[1]).copied().collect();
            out = out.add(&Tensor::term(vec![word], c.clone()));
        }
        out
    };
    let mut residuals = Vec::new();
    for g in Gen::ALL {
        let d = coproduct_gen(g);
        let unit = Tensor::unit(1).scale(&counit_gen(g));
        let left = multiply(&d.map_factor(0, |w| s.word(w)));
        let right = multiply(&d.map_factor(1, |w| s.word(w)));
        for r in reps.singles() {
            residuals.push((format!("left {g}"), left.sub(&unit).evaluate(&r)));
            residuals.push((format!("right {g}"), right.sub(&unit).evaluate(&r)));
        }
    }
    matrix_report("hopf_antipode_axiom", &residuals)
}

/// The representations the Hopf checks run in.
#[derive(Clone, Debug)]
pub struct HopfReps {
    pub half: SuqGenerators,
    pub one: SuqGenerators,
}

impl HopfReps {
    pub fn new() -> Result<Self> {
        Ok(Self {
            half: rep_generators(HalfInt::from_twice(1))?,
            one: rep_generators(HalfInt::int(1))?,
        })
    }

    fn cube(&self) -> Vec<&SuqGenerators> {
        vec![&self.half; 3]
    }

    fn singles(&self) -> Vec<Vec<&SuqGenerators>> {
        vec![vec![&self.half], vec![&self.one]]
    }

    fn mixed_pair(&self) -> Vec<&SuqGenerators> {
        vec![&self.half, &self.one]
    }
}

/// Coassociativity, counit, the antipode on the relations, `epsilon S =
/// epsilon` and `swap (S (x) S) Delta = Delta S`, for the antipode
/// `S(J+-) = -t^(+-2) J+-`. The antipode axiom proper is added for
/// information: it singles out the scaling `-t^(+-1)` instead.
pub fn verify_hopf_axioms() -> Result<Vec<IdentityReport>> {
    let reps = HopfReps::new()?;
    let s = Antipode::squared_scaling();
    Ok(vec![
        check_coassociativity(&reps),
        check_counit(&reps),
        check_antipode_relations(&s, &reps),
        check_counit_antipode(&s),
        check_antipode_coproduct(&s, &reps),
        check_antipode_axiom(&s, &reps).informational(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coassociativity_of_raising_operator_has_three_terms() {
        let d = coproduct_gen(Gen::Jp);
        let left = d.map_factor(0, coproduct_word);
        assert_eq!(left, d.map_factor(1, coproduct_word));
        let expected: Vec<Vec<Word>> = vec![
            vec![vec![Gen::Jp], vec![Gen::K], vec![Gen::K]],
            vec![vec![Gen::Kinv], vec![Gen::Jp], vec![Gen::K]],
            vec![vec![Gen::Kinv], vec![Gen::Kinv], vec![Gen::Jp]],
        ];
        let got: Vec<Vec<Word>> = left.terms().map(|(w, _)| w.clone()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn listed_axioms_hold() {
        for r in verify_hopf_axioms().unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn antipode_image_of_commutator_in_spin_one() {
        // S(J+)S(J-) - S(J-)S(J+) = -(S of the right-hand side) in V_1
        let reps = HopfReps::new().unwrap();
        let s = Antipode::squared_scaling();
        let sp = s.gen(Gen::Jp).evaluate(&[&reps.one]);
        let sm = s.gen(Gen::Jm).evaluate(&[&reps.one]);
        let rhs = reps.one.cartan_bracket();
        let s_rhs = reps
            .one
            .kinv
            .mul(&reps.one.kinv)
            .sub(&reps.one.k.mul(&reps.one.k))
            .scale(&inverse_t_difference());
        assert_eq!(sp.commutator(&sm), s_rhs.scale(&-QRadical::one()));
        assert_eq!(s_rhs, rhs.scale(&-QRadical::one()));
    }

    #[test]
    fn antipode_axiom_selects_the_first_power() {
        let reps = HopfReps::new().unwrap();
        let stated = check_antipode_axiom(&Antipode::squared_scaling(), &reps);
        assert!(!stated.holds());
        assert_eq!(stated.witness.unwrap().labels, ["left J+"]);
        assert!(check_antipode_axiom(&Antipode::convolution_inverse(), &reps).holds());
        // every other listed check is indifferent to the choice
        let s = Antipode::convolution_inverse();
        assert!(check_antipode_relations(&s, &reps).holds());
        assert!(check_antipode_coproduct(&s, &reps).holds());
    }

    #[test]
    fn broken_coproduct_is_caught() {
        let reps = HopfReps::new().unwrap();
        let d = coproduct_gen(Gen::Jp);
        let bad = d.add(&Tensor::term(vec![vec![Gen::Jp], vec![]], QRadical::one()));
        let left = bad.map_factor(0, coproduct_word);
        let right = bad.map_factor(1, coproduct_word);
        assert_ne!(left, right);
        assert!(!left.evaluate(&reps.cube()).sub(&right.evaluate(&reps.cube())).is_zero());
    }

    #[test]
    fn wrong_counit_fails() {
        let d = coproduct_gen(Gen::Jp);
        let bad = d.map_factor(0, |w| Tensor::scalar(QRadical::from_i64(w.len() as i64 + 1)));
        assert_ne!(bad, formal(Gen::Jp));
    }
}
