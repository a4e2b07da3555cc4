//! The final gate: one line per criterion, every criterion exercised
//! through the same entry points the binary uses.

use modsurf::dynamics::{labeled_lambda, period_map};
use modsurf::families::{sample_chart_points, SurfaceModel};
use modsurf::mpoly::{gcd_fp, MPoly, Mono};
use modsurf::projgeom::ProjMap2;
use modsurf::scalar::{q_ratio, Fp, Scalar};
use modsurf_cli::{base_action_check, plane_map_symbolics, run_case, Status};

const SEED: u64 = 1;

/// splitmix64: deterministic stream for the inline property suites.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

struct Gate {
    failures: Vec<usize>,
}

impl Gate {
    fn criterion(&mut self, no: usize, ok: bool, detail: &str) {
        println!("criterion {no:2}: {} — {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures.push(no);
        }
    }

    fn from_cases(&mut self, no: usize, ids: &[&str], budget_ms: Option<u128>) {
        let mut ok = true;
        let mut parts = Vec::new();
        for id in ids {
            let r = run_case(id, SEED);
            ok &= matches!(r.status, Status::Pass);
            if let Some(budget) = budget_ms {
                if r.millis >= budget {
                    ok = false;
                    parts.push(format!("{id} exceeded {budget} ms ({} ms)", r.millis));
                    continue;
                }
            }
            parts.push(format!("{id}: {} [{} ms]", r.witness, r.millis));
        }
        self.criterion(no, ok, &parts.join("; "));
    }
}

#[test]
fn acceptance() {
    let mut gate = Gate { failures: Vec::new() };

    gate.from_cases(1, &["semiconj7"], Some(10_000));
    gate.from_cases(2, &["degrees7"], Some(600_000));
    gate.from_cases(3, &["branch7", "branch8"], None);
    gate.from_cases(4, &["matroids", "tvectors7", "tvectors8"], None);
    gate.from_cases(5, &["degree7", "degree8"], Some(120_000));
    gate.from_cases(6, &["multiplier7", "multiplier8"], None);

    match base_action_check(100003, SEED, 50) {
        Ok(w) => gate.criterion(7, true, &w),
        Err(e) => gate.criterion(7, false, &e),
    }

    gate.from_cases(8, &["aut7", "aut8"], None);
    gate.from_cases(9, &["periodic8"], Some(1_000));
    gate.from_cases(10, &["modular7", "modular8"], None);

    {
        let mut ok = true;
        let mut parts = Vec::new();
        match plane_map_symbolics() {
            Ok(w) => parts.push(w),
            Err(e) => {
                ok = false;
                parts.push(e);
            }
        }
        for id in ["commute7", "mu8"] {
            let r = run_case(id, SEED);
            ok &= matches!(r.status, Status::Pass);
            parts.push(format!("{id}: {}", r.witness));
        }
        gate.criterion(11, ok, &parts.join("; "));
    }

    gate.criterion(12, property_suites(), "field axioms, ring round trips, equivariance and period-map invariance at 1000 instances each");

    assert!(gate.failures.is_empty(), "failed criteria: {:?}", gate.failures);
}

const P: u64 = 1009;

fn field_axioms<K: Scalar>(a: &K, b: &K, c: &K) -> bool {
    a.add(b) == b.add(a)
        && a.mul(b) == b.mul(a)
        && a.add(b).add(c) == a.add(&b.add(c))
        && a.mul(b).mul(c) == a.mul(&b.mul(c))
        && a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c))
        && a.add(&a.neg()).is_zero()
        && (!a.is_unit() || a.mul(&a.inv().unwrap()).is_one())
}

fn rand_mpoly(rng: &mut Rng) -> MPoly<Fp> {
    let token = Fp::new(1, P);
    let nterms = (rng.next() % 5) as usize;
    MPoly::from_terms(
        3,
        (0..nterms).map(|_| {
            let m = Mono([
                (rng.next() % 3) as u16,
                (rng.next() % 3) as u16,
                (rng.next() % 3) as u16,
                0,
            ]);
            (m, Fp::new((rng.next() % P) as i64, P))
        }),
        token,
    )
}

fn rand_projmap(rng: &mut Rng) -> ProjMap2<Fp> {
    loop {
        let m: [[Fp; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| Fp::new((rng.next() % P) as i64, P)));
        if let Ok(g) = ProjMap2::new(m) {
            return g;
        }
    }
}

fn property_suites() -> bool {
    let mut rng = Rng(SEED);

    // Field axioms over F_p and Q.
    for _ in 0..1000 {
        let f: [Fp; 3] = std::array::from_fn(|_| Fp::new((rng.next() % P) as i64, P));
        if !field_axioms(&f[0], &f[1], &f[2]) {
            return false;
        }
        let q: [_; 3] = std::array::from_fn(|_| {
            q_ratio((rng.next() % 2001) as i64 - 1000, (rng.next() % 999) as i64 + 1)
        });
        if !field_axioms(&q[0], &q[1], &q[2]) {
            return false;
        }
    }

    // Polynomial ring round trips: exact division, gcd divisibility,
    // square roots.
    for _ in 0..1000 {
        let (a, b, g) = (rand_mpoly(&mut rng), rand_mpoly(&mut rng), rand_mpoly(&mut rng));
        if !b.is_zero() {
            match a.mul(&b).exact_div(&b) {
                Some(q) if q == a => {}
                _ => return false,
            }
        }
        if !g.is_zero() {
            let d = gcd_fp(&g.mul(&a), &g.mul(&b));
            if d.exact_div(&g).is_none() {
                return false;
            }
        }
        let sq = a.mul(&a);
        if !sq.is_zero() {
            match sq.poly_sqrt(|lead| lead.sqrt()) {
                Some(r) if r.mul(&r) == sq => {}
                _ => return false,
            }
        }
    }

    // PGL3 equivariance of the operator and period-map invariance.
    let token = Fp::new(1, P);
    let models = [SurfaceModel::new(7, &token), SurfaceModel::new(8, &token)];
    for i in 0..1000 {
        let model = &models[i % 2];
        let g = rand_projmap(&mut rng);
        let x = sample_chart_points(model, rng.next(), 1)[0];
        let Ok((c0, c1)) = model.parametrized_realization(&x) else {
            continue;
        };
        let gc1 = c1.apply(&g).unwrap();
        match (labeled_lambda(model.n, &c1), labeled_lambda(model.n, &gc1)) {
            (Ok(l), Ok(gl)) => {
                let tl = l.apply(&g).unwrap();
                if tl.len() != gl.len() || (0..tl.len()).any(|j| tl.line(j) != gl.line(j)) {
                    return false;
                }
            }
            (Err(_), Err(_)) => {}
            _ => return false,
        }
        if let Ok(back) = period_map(model, &c0, &c1) {
            if back != x {
                return false;
            }
        }
        let (gc0, gc1) = (c0.apply(&g).unwrap(), c1.apply(&g).unwrap());
        if let Ok(back) = period_map(model, &gc0, &gc1) {
            if back != x {
                return false;
            }
        }
    }
    true
}
