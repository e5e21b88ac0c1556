//! Dirichlet characters with values in F_p^x.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::arith::int::{factorize, inv_mod, kronecker_i64, mul_mod, pow_mod, primitive_root};

/// The character restricted to (Z/q^e)^x, stored by its values on a fixed
/// set of generators (a primitive root for odd q; -1 and 5 for q = 2).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Component {
    q: u64,
    e: u32,
    gens: Vec<u64>,
    orders: Vec<u64>,
    values: Vec<u64>,
}

fn unit_generators(q: u64, e: u32) -> (Vec<u64>, Vec<u64>) {
    let m = q.pow(e);
    if q == 2 {
        match e {
            0 | 1 => (vec![], vec![]),
            2 => (vec![3], vec![2]),
            _ => (vec![m - 1, 5], vec![2, m / 4]),
        }
    } else {
        (vec![primitive_root(q, e) % m], vec![m / q * (q - 1)])
    }
}

impl Component {
    fn modulus(&self) -> u64 {
        self.q.pow(self.e)
    }

    /// Exponents of n on the generators, reduced modulo gcd(order, p - 1);
    /// that is all the information a value in F_p^x can see.
    fn log(&self, n: u64, p: u64) -> Vec<u64> {
        let m = self.modulus();
        let n = n % m;
        if self.q == 2 {
            if self.e < 2 {
                return vec![];
            }
            let neg = n % 4 == 3;
            let t = if neg { m - n } else { n };
            if self.e == 2 {
                return vec![neg as u64];
            }
            let mut k = 0u64;
            let mut cur = 1u64;
            while cur != t {
                cur = cur * 5 % m;
                k += 1;
            }
            return vec![neg as u64, k];
        }
        let ord = self.orders[0];
        let r = ord.gcd(&(p - 1));
        let target = pow_mod(n, ord / r, m);
        let step = pow_mod(self.gens[0], ord / r, m);
        let mut cur = 1u64;
        for k in 0..r {
            if cur == target {
                return vec![k];
            }
            cur = mul_mod(cur, step, m);
        }
        unreachable!("{n} is not a unit modulo {m}")
    }

    fn eval(&self, n: u64, p: u64) -> u64 {
        self.log(n, p)
            .iter()
            .zip(&self.values)
            .fold(1, |acc, (&k, &v)| mul_mod(acc, pow_mod(v, k, p), p))
    }

    /// Smallest e' such that the component factors through (Z/q^e')^x.
    fn conductor_exponent(&self, p: u64) -> u32 {
        if self.values.iter().all(|&v| v == 1) {
            return 0;
        }
        if self.q == 2 {
            if self.e == 2 || self.values[1] == 1 {
                return 2;
            }
            let v5 = self.values[1];
            return (3..=self.e)
                .find(|&f| pow_mod(v5, 1 << (f - 2), p) == 1)
                .unwrap_or(self.e);
        }
        let v = self.values[0];
        (1..=self.e)
            .find(|&f| pow_mod(v, (self.q - 1) * self.q.pow(f - 1), p) == 1)
            .unwrap_or(self.e)
    }

    fn truncate(&self, f: u32) -> Option<Component> {
        if f == 0 {
            return None;
        }
        let m = self.q.pow(f);
        let (gens, orders) = unit_generators(self.q, f);
        let values = if self.q == 2 && f == 2 {
            vec![self.values[0]]
        } else {
            self.values.clone()
        };
        debug_assert!(gens.iter().zip(&self.gens).all(|(a, b)| a % m == b % m));
        Some(Component {
            q: self.q,
            e: f,
            gens,
            orders,
            values,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ModPCharacter {
    p: u64,
    comps: Vec<Component>,
}

/// Integers that reduce to each structural generator on one prime-power
/// component and to 1 on the others, in component order.
pub fn crt_generators(factors: &[(u64, u32)]) -> Vec<u64> {
    let big_m: u64 = factors.iter().map(|&(q, e)| q.pow(e)).product();
    let mut out = Vec::new();
    for &(q, e) in factors {
        let m = q.pow(e);
        let rest = big_m / m;
        let (gens, _) = unit_generators(q, e);
        for g in gens {
            // x = 1 mod rest, x = g mod m
            let inv = inv_mod(rest % m, m).unwrap_or(0);
            let t = mul_mod((g + m - 1) % m, inv, m);
            out.push((1 + t as u128 * rest as u128 % big_m as u128) as u64 % big_m.max(1));
        }
    }
    out
}

impl ModPCharacter {
    pub fn trivial(p: u64) -> Self {
        ModPCharacter { p, comps: vec![] }
    }

    /// The mod-p cyclotomic character: l maps to l mod p.
    pub fn cyclotomic(p: u64) -> Self {
        let g = primitive_root(p, 1);
        ModPCharacter {
            p,
            comps: vec![Component {
                q: p,
                e: 1,
                gens: vec![g],
                orders: vec![p - 1],
                values: vec![g % p],
            }],
        }
    }

    /// The quadratic character of discriminant `disc`, as a +-1 valued
    /// character.
    pub fn quadratic(p: u64, disc: i64) -> Self {
        let fac = factorize(&BigInt::from(disc)).expect("nonzero discriminant");
        let factors: Vec<(u64, u32)> = fac
            .iter()
            .map(|(q, &e)| (u64::try_from(q).expect("small discriminant"), e))
            .collect();
        Self::from_crt_values(p, &factors, |g| {
            if kronecker_i64(disc, g as i64).expect("nonzero") == 1 {
                1
            } else {
                p - 1
            }
        })
    }

    /// Build a character of modulus prod q^e from its values on
    /// `crt_generators(factors)`.
    pub fn from_crt_values(
        p: u64,
        factors: &[(u64, u32)],
        mut value: impl FnMut(u64) -> u64,
    ) -> Self {
        let mut factors = factors.to_vec();
        factors.sort_unstable();
        let crt = crt_generators(&factors);
        let mut it = crt.into_iter();
        let comps = factors
            .iter()
            .map(|&(q, e)| {
                let (gens, orders) = unit_generators(q, e);
                let values = gens.iter().map(|_| value(it.next().unwrap()) % p).collect();
                Component {
                    q,
                    e,
                    gens,
                    orders,
                    values,
                }
            })
            .collect();
        let chi = ModPCharacter { p, comps };
        chi.assert_homomorphism();
        chi
    }

    fn assert_homomorphism(&self) {
        for c in &self.comps {
            for (&o, &v) in c.orders.iter().zip(&c.values) {
                assert!(v != 0 && pow_mod(v, o, self.p) == 1, "value {v} has the wrong order");
            }
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> u64 {
        self.comps.iter().map(Component::modulus).product()
    }

    pub fn modulus_factors(&self) -> Vec<(u64, u32)> {
        self.comps.iter().map(|c| (c.q, c.e)).collect()
    }

    /// (generator mod M, value) pairs.
    pub fn values(&self) -> Vec<(u64, u64)> {
        let crt = crt_generators(&self.modulus_factors());
        let vals = self.comps.iter().flat_map(|c| c.values.iter().copied());
        crt.into_iter().zip(vals).collect()
    }

    /// chi(n) in F_p^x, or None when n shares a factor with the modulus.
    pub fn eval(&self, n: u64) -> Option<u64> {
        if self.comps.iter().any(|c| n.is_multiple_of(c.q)) {
            return None;
        }
        Some(
            self.comps
                .iter()
                .fold(1, |acc, c| mul_mod(acc, c.eval(n, self.p), self.p)),
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.comps.iter().all(|c| c.values.iter().all(|&v| v == 1))
    }

    pub fn primitive(&self) -> Self {
        let comps = self
            .comps
            .iter()
            .filter_map(|c| c.truncate(c.conductor_exponent(self.p)))
            .collect();
        ModPCharacter { p: self.p, comps }
    }

    pub fn conductor(&self) -> u64 {
        self.primitive().modulus()
    }

    pub fn order(&self) -> u64 {
        let mut o = 1u64;
        for c in &self.comps {
            for &v in &c.values {
                let k = (1..self.p).find(|&k| pow_mod(v, k, self.p) == 1).unwrap();
                o = o.lcm(&k);
            }
        }
        o
    }

    pub fn mul(&self, o: &ModPCharacter) -> ModPCharacter {
        assert_eq!(self.p, o.p);
        let mut factors = self.modulus_factors();
        for (q, e) in o.modulus_factors() {
            match factors.iter_mut().find(|(q2, _)| *q2 == q) {
                Some(f) => f.1 = f.1.max(e),
                None => factors.push((q, e)),
            }
        }
        factors.sort_unstable();
        Self::from_crt_values(self.p, &factors, |g| {
            let a = self.eval(g).expect("generator is a unit");
            let b = o.eval(g).expect("generator is a unit");
            mul_mod(a, b, self.p)
        })
    }

    pub fn inv(&self) -> ModPCharacter {
        let mut out = self.clone();
        for c in &mut out.comps {
            for v in &mut c.values {
                *v = inv_mod(*v, self.p).expect("unit");
            }
        }
        out
    }

    /// Whether the restriction to a decomposition group at l is trivial:
    /// unramified at l with chi(l) = 1.
    pub fn restriction_trivial_at(&self, l: u64) -> bool {
        self.primitive().eval(l) == Some(1)
    }

    /// Of chi and chi * eta, the one with smaller conductor. Characters of
    /// G_K are only determined up to the quadratic character eta of K.
    pub fn canonical_mod(&self, eta: &ModPCharacter) -> ModPCharacter {
        let a = self.primitive();
        let b = self.mul(eta).primitive();
        let key = |c: &ModPCharacter| (c.modulus(), c.values());
        if key(&b) < key(&a) {
            b
        } else {
            a
        }
    }

    pub fn label(&self) -> String {
        let prim = self.primitive();
        if prim.is_trivial() {
            return "1".to_string();
        }
        let cyc = ModPCharacter::cyclotomic(self.p);
        if prim == cyc {
            return "chibar".to_string();
        }
        if prim == cyc.inv() {
            return "chibar^-1".to_string();
        }
        let vals: Vec<String> = prim.values().iter().map(|(g, v)| format!("{g}->{v}")).collect();
        format!("cond {} [{}]", prim.modulus(), vals.join(", "))
    }
}

impl PartialEq for ModPCharacter {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p && self.primitive().comps == o.primitive().comps
    }
}

impl Eq for ModPCharacter {}

impl fmt::Display for ModPCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Serialize)]
struct CharacterJson {
    label: String,
    p: u64,
    conductor: u64,
    values: Vec<(u64, u64)>,
}

impl Serialize for ModPCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let prim = self.primitive();
        CharacterJson {
            label: self.label(),
            p: self.p,
            conductor: prim.modulus(),
            values: prim.values(),
        }
        .serialize(s)
    }
}
