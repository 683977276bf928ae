//! Lower bounds on the complexity `N(S)` of a shift `S ⊆ X × Y`:
//! conditional entropy at periodic points, fooling shifts and common
//! factors.

use serde::Serialize;

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::infinite::protocol::unzip_pairs;
use crate::shift::{
    apply_block_code, serialize_bits, sofic_compare, sofic_contains, sofic_product, sofic_union,
    spectral_radius, BlockCode, EntropyValue, Subshift,
};

/// Upper limit on the number of periodic points tried.
pub const MAX_PERIODIC_POINTS: usize = 1 << 20;

/// The bi-infinite repetition of `cycle`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicWord {
    cycle: Word,
}

impl PeriodicWord {
    pub fn new(cycle: Word) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::input("period must be at least 1"));
        }
        Ok(PeriodicWord { cycle })
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[Sym] {
        &self.cycle
    }
}

fn pair_parts(s: &Subshift) -> Result<(Alphabet, Alphabet)> {
    let parts = s.alphabet().expect_parts(2)?;
    Ok((parts[0].clone(), parts[1].clone()))
}

/// Growth rate of the `y` with `(x, y) ∈ S` for a periodic `x`.
///
/// The fiber graph has states `(q, i mod p)` over a right-resolving
/// presentation of `S`, keeping the edges whose first coordinate is
/// `x_i`; its spectral radius is the `p`-th root of that of the product of
/// the `p` restricted transfer matrices.
pub fn conditional_entropy(s: &Subshift, x: &PeriodicWord, tol: f64) -> Result<f64> {
    let (a, _) = pair_parts(s)?;
    if x.cycle.iter().any(|&c| c >= a.len()) {
        return Err(Error::input("periodic word is not over the first alphabet"));
    }
    let g = s.resolving_graph()?;
    let p = x.period();
    let mut edges = Vec::new();
    for &(from, label, to) in g.edges() {
        let first = s.alphabet().split(label)[0];
        for phase in 0..p {
            if x.cycle[phase] == first {
                edges.push((from * p + phase, to * p + (phase + 1) % p));
            }
        }
    }
    match spectral_radius(g.states() * p, &edges, tol) {
        Some(b) => Ok(b.log2_mid().max(0.0)),
        None => Err(Error::input(format!(
            "periodic point ({})^∞ is not in the projection onto the first coordinate",
            a.render(&x.cycle)
        ))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionalReport {
    /// Largest conditional entropy found at a periodic point; a lower
    /// estimate of `H_S(Y|X)`.
    pub estimate: f64,
    /// A cycle attaining the estimate.
    pub attained_at: Vec<String>,
    pub max_period: usize,
    #[serde(serialize_with = "serialize_bits")]
    pub entropy_y: EntropyValue,
    /// `H(Y) - estimate`. Only a lower bound on `N(S)` if the estimate is
    /// the true supremum.
    pub bound_estimate: f64,
    pub label: &'static str,
}

/// Maximum of [`conditional_entropy`] over periodic points of period up to
/// `max_period` in the projection of `S` onto its first coordinate.
pub fn conditional_entropy_sup(s: &Subshift, max_period: usize, tol: f64) -> Result<ConditionalReport> {
    if max_period == 0 {
        return Err(Error::input("max period must be at least 1"));
    }
    let (a, _) = pair_parts(s)?;
    let total: u128 = (1..=max_period).map(|p| (a.len() as u128).saturating_pow(p as u32)).sum();
    if total > MAX_PERIODIC_POINTS as u128 {
        return Err(Error::guard("periodic points", total, MAX_PERIODIC_POINTS as u128));
    }
    let mut best: Option<(f64, Word)> = None;
    for p in 1..=max_period {
        for cycle in a.all_words(p) {
            let h = match conditional_entropy(s, &PeriodicWord::new(cycle.clone())?, tol) {
                Ok(h) => h,
                Err(Error::Input(_)) => continue,
                Err(e) => return Err(e),
            };
            if best.as_ref().is_none_or(|(b, _)| h > *b + tol) {
                best = Some((h, cycle));
            }
        }
    }
    let (estimate, cycle) = best.ok_or_else(|| Error::input("no periodic point of the allowed periods"))?;
    let entropy_y = s.to_sofic().project(&[1])?.entropy(tol)?;
    Ok(ConditionalReport {
        estimate,
        attained_at: a.tokens(&cycle),
        max_period,
        entropy_y,
        bound_estimate: entropy_y.bits() - estimate,
        label: "estimate",
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FoolingReport {
    #[serde(serialize_with = "serialize_bits")]
    pub entropy_f: EntropyValue,
    #[serde(serialize_with = "serialize_bits")]
    pub entropy_cross: EntropyValue,
    pub certified: bool,
    /// `H(F)` when certified.
    pub bound: Option<f64>,
}

/// Entropy test for a fooling shift `F ⊆ S`.
///
/// The cross shift holds the `(x, y, x′, y′)` with both pairs in `F` and
/// the swapped pairs `(x, y′)`, `(x′, y)` in `S`. For a genuine fooling
/// shift each pair has few partners, so the cross shift should carry no
/// more entropy than `F`; this is a heuristic certificate.
pub fn fooling_certificate(s: &Subshift, f: &Subshift, tol: f64) -> Result<FoolingReport> {
    let (a, b) = pair_parts(s)?;
    if !sofic_contains(&s.to_sofic(), &f.to_sofic())? {
        return Err(Error::input("F is not contained in S"));
    }
    let quad = Alphabet::product(&[&a, &b, &a, &b]);
    let pair = s.alphabet().clone();
    let gf = f.resolving_graph()?.with_alphabet(pair.clone())?;
    let gs = s.resolving_graph()?;
    let ff = sofic_product(&gf, &gf, &quad, |u, v| {
        let (p, q) = (pair.split(u), pair.split(v));
        Some(quad.join(&[p[0], p[1], q[0], q[1]]))
    })?;
    let with_first = sofic_product(&ff, &gs, &quad, |t, u| {
        let (c, p) = (quad.split(t), pair.split(u));
        (p[0] == c[0] && p[1] == c[3]).then_some(t)
    })?;
    let cross = sofic_product(&with_first, &gs, &quad, |t, u| {
        let (c, p) = (quad.split(t), pair.split(u));
        (p[0] == c[2] && p[1] == c[1]).then_some(t)
    })?;
    let entropy_f = f.entropy(tol)?;
    let entropy_cross = cross.path_entropy(tol);
    let certified = !entropy_f.is_empty_shift() && entropy_cross.bits() <= entropy_f.bits() + 2.0 * tol;
    Ok(FoolingReport {
        entropy_f,
        entropy_cross,
        certified,
        bound: certified.then(|| entropy_f.bits()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CommonFactorReport {
    /// Entropy of the common image `φ(X) = ψ(Y)`, a lower bound on `N(S)`.
    pub bound: f64,
    #[serde(serialize_with = "serialize_bits")]
    pub entropy_f: EntropyValue,
    /// True when the image is all of `F`.
    pub onto: bool,
}

/// Common-factor lower bound: if `φ(x) = ψ(y)` for every `(x, y) ∈ S`,
/// every protocol's message shift factors onto the common image, so its
/// entropy bounds `N(S)` from below.
pub fn common_factor_bound(
    s: &Subshift,
    phi: &BlockCode,
    psi: &BlockCode,
    f: &Subshift,
    tol: f64,
) -> Result<CommonFactorReport> {
    let (a, b) = pair_parts(s)?;
    if phi.source() != &a || psi.source() != &b {
        return Err(Error::input("block code sources do not match the coordinates of S"));
    }
    if phi.target() != f.alphabet() || psi.target() != f.alphabet() {
        return Err(Error::input("block code targets do not match the alphabet of F"));
    }

    // Commutation on every window of S wide enough for both codes.
    let w = phi.radius().max(psi.radius());
    let sofic = s.to_sofic();
    for word in sofic.words(2 * w + 1)? {
        let (x, y) = unzip_pairs(s.alphabet(), &word);
        let left = phi.image(&x[w - phi.radius()..=w + phi.radius()])?;
        let right = psi.image(&y[w - psi.radius()..=w + psi.radius()])?;
        if left != right {
            return Err(Error::Rejected(format!(
                "codes disagree on window `{}`: φ gives {}, ψ gives {}",
                s.alphabet().render(&word),
                f.alphabet().token(left),
                f.alphabet().token(right)
            )));
        }
    }

    let x_shift = Subshift::Sofic(sofic.project(&[0])?);
    let image = apply_block_code(phi, &x_shift)?;
    let target = f.to_sofic();
    if !sofic_contains(&target, &image)? {
        let cmp = sofic_compare(&sofic_union(&target, &image)?, &target)?;
        let witness = cmp.witness.map(|w| cmp.alphabet.render(&w)).unwrap_or_default();
        return Err(Error::Rejected(format!("image of the codes leaves F at `{witness}`")));
    }
    let onto = sofic_contains(&image, &target)?;
    Ok(CommonFactorReport {
        bound: image.entropy(tol)?.bits(),
        entropy_f: f.entropy(tol)?,
        onto,
    })
}
