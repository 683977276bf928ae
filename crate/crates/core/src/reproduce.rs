//! Named reference checks at desk scale, run by the `reproduce-paper`
//! subcommand.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::{Alphabet, Word};
use crate::error::Result;
use crate::finite::{
    amortized_sequence, cover_number_exact, neq_index_protocol, tensor_power, validate_cover, RelationMatrix,
};
use crate::infinite::{
    conditional_entropy, eq_protocol, eq_shift, extract_protocol, fooling_certificate, lift_protocol,
    protocol_validate, relation_shift, trivial_protocol, PeriodicWord,
};
use crate::shift::{
    beta_root, beta_shift, build_sft, build_sft_from_text, product_shift, sofic_equal, SftPresentation,
    SoficPresentation, Subshift,
};
use crate::wang::{
    border_protocol, concat_relation, counterexample_oracle, enumerate_patterns, paper_tileset,
    residual_profile_count, SoficOracle,
};

const TOL: f64 = 1e-12;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The golden-mean shift: no two consecutive 1s.
pub fn golden_mean() -> SftPresentation {
    build_sft_from_text(&Alphabet::digits(2), &["11"]).expect("valid")
}

/// The even shift: blocks of 1s between two 0s have even length.
pub fn even_shift() -> SoficPresentation {
    SoficPresentation::new(Alphabet::digits(2), 2, vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)])
        .expect("valid")
        .trim()
}

/// An SFT over 2 or 3 letters forbidding up to 4 random words of length at
/// most 3, redrawn until nonempty.
pub fn random_sft(rng: &mut impl Rng) -> SftPresentation {
    loop {
        let alphabet = Alphabet::digits(rng.gen_range(2..=3));
        let forbidden: Vec<Word> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let len = rng.gen_range(1..=3);
                (0..len).map(|_| rng.gen_range(0..alphabet.len())).collect()
            })
            .collect();
        let s = build_sft(&alphabet, &forbidden).expect("symbols in range");
        if !s.is_empty() {
            return s;
        }
    }
}

fn all_pass<T>(items: impl IntoIterator<Item = T>, f: impl Fn(&T) -> Result<bool>) -> Result<bool> {
    for item in items {
        if !f(&item)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn full_shift_entropy() -> Result<(bool, String)> {
    let ok = all_pass([2usize, 3, 4, 8], |&k| {
        let h = SftPresentation::full_shift(&Alphabet::digits(k)).entropy(TOL).bits();
        Ok((h - (k as f64).log2()).abs() <= 1e-9)
    })?;
    Ok((ok, "H of the full k-shift is log2 k for k = 2, 3, 4, 8".into()))
}

fn golden_entropy() -> Result<(bool, String)> {
    let g = golden_mean();
    let h = g.entropy(TOL).bits();
    let log2 = |c: BigUint| c.to_f64().unwrap().log2();
    let slope = log2(g.count_words(65)) - log2(g.count_words(64));
    let ok = (h - 0.694242).abs() <= 1e-5 && (slope - h).abs() <= 1e-9;
    Ok((ok, format!("H = {h:.9}, log2 c_65 - log2 c_64 = {slope:.9}")))
}

fn eq_tight() -> Result<(bool, String)> {
    let ok = all_pass(1..=3usize, |&k| {
        let c = cover_number_exact(&RelationMatrix::eq_bits(k), u64::MAX)?;
        Ok(c.exact && c.cover_number == 1 << k)
    })?;
    Ok((ok, "C(EQ on k bits) = 2^k for k = 1, 2, 3".into()))
}

fn neq_upper() -> Result<(bool, String)> {
    let ok = all_pass(1..=4usize, |&k| {
        let c = neq_index_protocol(k)?;
        validate_cover(&RelationMatrix::neq_bits(k), &c.rectangles)?;
        Ok(c.cover_number == 2 * k && (c.nd_cc_bits - ((k as f64).log2() + 1.0)).abs() < 1e-12)
    })?;
    Ok((ok, "index-and-bit protocol for NEQ on k bits uses 2k messages".into()))
}

fn trivial() -> Result<(bool, String)> {
    let c = cover_number_exact(&RelationMatrix::all_ones(4, 5), u64::MAX)?;
    let full: Subshift = SftPresentation::full_shift(&Alphabet::digits(2)).into();
    let golden: Subshift = golden_mean().into();
    let s: Subshift = product_shift(full.as_sft().unwrap(), golden.as_sft().unwrap())?.into();
    let report = protocol_validate(&s, &trivial_protocol(&full, &golden)?, TOL)?;
    let ok = c.cover_number == 1 && c.nd_cc_bits == 0.0 && report.valid && report.entropy_z.bits() == 0.0;
    Ok((ok, "all-ones relation and X × Y need no communication".into()))
}

fn lifted(r: &RelationMatrix, n: usize, budget: u64) -> Result<crate::infinite::ProtocolTriple> {
    let cover = cover_number_exact(&tensor_power(r, n)?, budget)?;
    lift_protocol(r, &cover.rectangles, n)
}

fn lift_entropy(budget: u64) -> Result<(bool, String)> {
    let ok = all_pass([RelationMatrix::identity(2), RelationMatrix::neq_bits(1)], |r| {
        let p = lifted(r, 2, budget)?;
        let h = p.entropy(TOL)?.bits();
        let valid = protocol_validate(&relation_shift(r)?.into(), &p, TOL)?.valid;
        // four rectangle names and the blank
        Ok(p.c().len() == 5 && (h - 1.0).abs() <= 1e-6 && valid)
    })?;
    Ok((ok, "covers of size 4 at n = 2 lift to valid protocols of entropy 1".into()))
}

/// Every nonempty relation on 2 × 2 inputs.
pub fn small_relations() -> Vec<RelationMatrix> {
    (1u32..16)
        .map(|mask| RelationMatrix::from_fn(2, 2, |i, j| mask >> (2 * i + j) & 1 == 1))
        .collect()
}

fn extraction(budget: u64) -> Result<(bool, String)> {
    let mut cases = 0;
    for r in small_relations() {
        for n in 1..=3 {
            let e = extract_protocol(&lifted(&r, n, budget)?, n)?;
            let power = tensor_power(&r, n)?;
            let c_n: f64 = e.c_n.parse().unwrap();
            let bits_ok = (e.bits - (c_n.log2() + 4.0 * (e.r as f64).log2())).abs() < 1e-12;
            if e.accepted.ones().ne(power.ones()) || !bits_ok {
                return Ok((false, format!("mismatch for a 2 × 2 relation at n = {n}")));
            }
            cases += 1;
        }
    }
    Ok((true, format!("{cases} relation/length pairs accept exactly R^n")))
}

fn leq_conditional() -> Result<(bool, String)> {
    let leq: Subshift = relation_shift(&RelationMatrix::from_fn(2, 2, |i, j| i <= j))?.into();
    let h = |c: Word| conditional_entropy(&leq, &PeriodicWord::new(c)?, TOL);
    let values = [h(vec![0])?, h(vec![1])?, h(vec![0, 1])?];
    let ok = values.iter().zip([1.0, 0.0, 0.5]).all(|(v, e)| (v - e).abs() <= 1e-9);
    Ok((ok, format!("H(Y|x) at 0^∞, 1^∞, (01)^∞ = {values:?}")))
}

fn eq_t() -> Result<(bool, String)> {
    let shifts: Vec<Subshift> = vec![
        SftPresentation::full_shift(&Alphabet::digits(2)).into(),
        golden_mean().into(),
        even_shift().into(),
    ];
    let ok = all_pass(shifts, |t| {
        let s = eq_shift(t)?;
        let valid = protocol_validate(&s, &eq_protocol(t)?, TOL)?.valid;
        let f = fooling_certificate(&s, &s, TOL)?;
        let h = t.entropy(TOL)?.bits();
        Ok(valid && f.certified && f.bound.is_some_and(|b| (b - h).abs() <= 2e-6))
    })?;
    Ok((ok, "EQ_T validated and fooled for the full shift, golden mean and even shift".into()))
}

fn amortized(budget: u64) -> Result<(bool, String)> {
    let ok = all_pass([RelationMatrix::identity(2), RelationMatrix::neq_bits(2)], |r| {
        let seq = amortized_sequence(r, 2, budget)?;
        let bracket = seq.rows.iter().all(|row| seq.limit_bits - 1e-3 <= row.upper_bits);
        let fekete = seq.rows.windows(2).all(|w| w[1].fekete_bits <= w[0].fekete_bits);
        let sub = seq.rows[1].cover_upper <= seq.rows[0].cover_upper.pow(2);
        Ok(bracket && fekete && sub)
    })?;
    Ok((ok, "log2 C* ≤ log2 C(R^n)/n and C(R^2) ≤ C(R)^2 for EQ_1 and NEQ_2".into()))
}

fn wang() -> Result<(bool, String)> {
    let t = paper_tileset();
    for w in 1..=4 {
        for h in 1..=4 {
            let patterns = enumerate_patterns(&t, w, h, 2)?;
            if patterns.iter().any(|p| p.iter().flatten().filter(|&&s| s == 1).count() > 1) {
                return Ok((false, format!("a {w} × {h} pattern has two 1s")));
            }
        }
    }
    let mut entropies = Vec::new();
    for n in 1..=2 {
        for m in 1..=2 {
            let p = border_protocol(&t, n, m)?;
            let report = protocol_validate(&concat_relation(&t, n, m)?.into(), &p, TOL)?;
            if !report.valid {
                return Ok((false, format!("border protocol invalid for ({n}, {m})")));
            }
            entropies.push(report.entropy_z.bits());
        }
    }
    let ok = entropies.iter().all(|&h| h <= 3f64.log2() + 1e-9 && h == entropies[0]);
    Ok((ok, format!("at most one 1 up to 4 × 4; border protocol entropy {:.6}", entropies[0])))
}

fn residuals() -> Result<(bool, String)> {
    let counts = |v: Vec<crate::wang::ResidualCount>| v.into_iter().map(|c| c.count).collect::<Vec<_>>();
    let ce = counts(residual_profile_count(&counterexample_oracle(), 8, 10));
    let growing = ce[2..].windows(2).all(|w| w[0] < w[1]);
    let mut stable = true;
    for g in [(&golden_mean()).into(), even_shift()] {
        let c = counts(residual_profile_count(&SoficOracle::new(&g)?, 10, 10));
        stable &= c[6..].iter().all(|&x| x == c[6]);
    }
    Ok((growing && stable, format!("counterexample profile counts {ce:?}")))
}

fn sofic_equality(seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..50 {
        let s = random_sft(&mut rng);
        let recoded = s.with_window(s.window() + 2)?;
        if !sofic_equal(&(&s).into(), &(&recoded).into())? {
            return Ok((false, "a shift differs from its higher-block presentation".into()));
        }
    }
    let golden = (&golden_mean()).into();
    let full = (&SftPresentation::full_shift(&Alphabet::digits(2))).into();
    let ok = !sofic_equal(&golden, &full)?;
    Ok((ok, format!("50 random SFTs (seed {seed}) equal their recodings; golden ≠ full")))
}

fn beta() -> Result<(bool, String)> {
    let two = beta_shift(&[2])?;
    let phi = beta_shift(&[1, 1])?;
    let ok = (two.entropy(TOL).bits() - 1.0).abs() <= 1e-9
        && sofic_equal(&(&phi).into(), &(&golden_mean()).into())?
        && (beta_root(&[1, 1])? - (1.0 + 5f64.sqrt()) / 2.0).abs() <= 1e-9;
    Ok((ok, "β = 2 gives the full shift, β = golden ratio the golden mean shift".into()))
}

/// Run every check. `budget` bounds each exact cover search.
type NamedCheck = (&'static str, Box<dyn Fn() -> Result<(bool, String)>>);

pub fn reproduce_paper(seed: u64, budget: u64) -> Vec<Check> {
    let checks: Vec<NamedCheck> = vec![
        ("full-shift-entropy", Box::new(full_shift_entropy)),
        ("golden-mean-entropy", Box::new(golden_entropy)),
        ("eq-tight", Box::new(eq_tight)),
        ("neq-upper", Box::new(neq_upper)),
        ("trivial-protocol", Box::new(trivial)),
        ("lift-entropy", Box::new(move || lift_entropy(budget))),
        ("extract-round-trip", Box::new(move || extraction(budget))),
        ("leq-conditional-entropy", Box::new(leq_conditional)),
        ("eq-t-protocol", Box::new(eq_t)),
        ("amortized-bracket", Box::new(move || amortized(budget))),
        ("wang-five-tiles", Box::new(wang)),
        ("residual-profiles", Box::new(residuals)),
        ("sofic-equality", Box::new(move || sofic_equality(seed))),
        ("beta-shifts", Box::new(beta)),
    ];
    checks
        .into_iter()
        .map(|(name, f)| match f() {
            Ok((passed, detail)) => Check { name, passed, detail },
            Err(e) => Check {
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}
