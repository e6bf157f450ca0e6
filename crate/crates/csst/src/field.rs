//! GF(2^s) arithmetic in a polynomial basis, with log/antilog tables, and
//! minimal polynomials of powers of a primitive n-th root of unity.

use crate::error::{Error, Result};

/// Lexicographically smallest primitive polynomial of each degree 2..=16,
/// as a coefficient bit mask with bit `s` set. Primitivity is re-verified
/// whenever a field is constructed.
const PRIMITIVE_POLY: [u32; 15] = [
    0x7,     // s=2:  x^2+x+1
    0xb,     // s=3:  x^3+x+1
    0x13,    // s=4:  x^4+x+1
    0x25,    // s=5:  x^5+x^2+1
    0x43,    // s=6:  x^6+x+1
    0x83,    // s=7:  x^7+x+1
    0x11d,   // s=8:  x^8+x^4+x^3+x^2+1
    0x211,   // s=9:  x^9+x^4+1
    0x409,   // s=10: x^10+x^3+1
    0x805,   // s=11: x^11+x^2+1
    0x1053,  // s=12: x^12+x^6+x^4+x+1
    0x201b,  // s=13: x^13+x^4+x^3+x+1
    0x402b,  // s=14: x^14+x^5+x^3+x+1
    0x8003,  // s=15: x^15+x+1
    0x1002d, // s=16: x^16+x^5+x^3+x^2+1
];

/// The field GF(2^s) over a fixed primitive modulus, with multiplication by
/// log/antilog lookup. Elements are s-bit coefficient masks in the polynomial
/// basis; `x` (mask `0b10`) generates the multiplicative group.
pub struct ExtField {
    s: u32,
    modulus: u32,
    n_max: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl ExtField {
    /// Build GF(2^s) on the table modulus for `2 <= s <= 16`.
    pub fn new(s: u32) -> Result<Self> {
        if !(2..=16).contains(&s) {
            return Err(Error::DegreeOutOfRange(s));
        }
        let modulus = PRIMITIVE_POLY[(s - 2) as usize];
        let n_max = (1u32 << s) - 1;
        let mut log = vec![0u32; (n_max + 1) as usize];
        let mut exp = vec![0u32; 2 * n_max as usize];
        let mut cur = 1u32;
        for i in 0..n_max {
            exp[i as usize] = cur;
            exp[(i + n_max) as usize] = cur;
            assert!(
                !(cur == 1 && i > 0),
                "modulus {modulus:#x} is not primitive for s={s}"
            );
            log[cur as usize] = i;
            cur <<= 1;
            if cur >> s != 0 {
                cur ^= modulus;
            }
        }
        assert_eq!(cur, 1, "order of x must be 2^{s}-1");
        Ok(Self {
            s,
            modulus,
            n_max,
            log,
            exp,
        })
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Order of the full multiplicative group, 2^s - 1.
    pub fn group_order(&self) -> u32 {
        self.n_max
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.exp[(self.n_max - self.log[a as usize]) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let e = (e % self.n_max as u64) as u32;
        self.exp[((self.log[a as usize] as u64 * e as u64) % self.n_max as u64) as usize]
    }

    /// x^e, i.e. the e-th power of the fixed generator.
    #[inline]
    pub fn alpha_pow(&self, e: u64) -> u32 {
        self.exp[(e % self.n_max as u64) as usize]
    }

    /// A primitive n-th root of unity for `n | 2^s - 1`.
    pub fn nth_root(&self, n: u32) -> Result<u32> {
        if n == 0 || !self.n_max.is_multiple_of(n) {
            return Err(Error::BadSubgroupOrder { n, s: self.s });
        }
        Ok(self.alpha_pow((self.n_max / n) as u64))
    }

    pub fn element(&self, value: u32) -> ExtFieldElement<'_> {
        assert!(value <= self.n_max, "element {value:#x} has more than {} bits", self.s);
        ExtFieldElement { field: self, value }
    }

    /// Minimal polynomial over F2 of beta^a, where beta is a primitive n-th
    /// root of unity; returned as a coefficient bit mask. Its roots are
    /// exactly `{beta^i : i in the doubling orbit of a}`.
    pub fn minimal_polynomial(&self, n: u32, a: u32) -> Result<u32> {
        if n == 0 || !self.n_max.is_multiple_of(n) {
            return Err(Error::BadSubgroupOrder { n, s: self.s });
        }
        if a == 0 || a > n {
            return Err(Error::BadResidue { a, n });
        }
        let beta = self.nth_root(n)?;
        // doubling orbit of a mod n, with the residue 0 written as n
        let mut orbit = Vec::new();
        let mut x = a;
        loop {
            orbit.push(x);
            x = (2 * x) % n;
            if x == 0 {
                x = n;
            }
            if x == a {
                break;
            }
        }
        // expand prod (X - beta^i); subtraction is addition in characteristic 2
        let mut coeffs: Vec<u32> = vec![1];
        for &i in &orbit {
            let root = self.pow(beta, i as u64);
            let mut next = vec![0u32; coeffs.len() + 1];
            for (j, &c) in coeffs.iter().enumerate() {
                next[j + 1] ^= c;
                next[j] = self.add(next[j], self.mul(root, c));
            }
            coeffs = next;
        }
        let mut mask = 0u32;
        for (j, &c) in coeffs.iter().enumerate() {
            if c > 1 {
                return Err(Error::Inconsistency(format!(
                    "minimal polynomial of beta^{a} mod {n} has coefficient {c:#x} outside F2"
                )));
            }
            mask |= c << j;
        }
        Ok(mask)
    }
}

impl std::fmt::Debug for ExtField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExtField(2^{}, modulus={:#x})", self.s, self.modulus)
    }
}

/// An element bound to its field, so cross-field operations are rejected.
#[derive(Clone, Copy)]
pub struct ExtFieldElement<'f> {
    field: &'f ExtField,
    value: u32,
}

impl<'f> ExtFieldElement<'f> {
    pub fn value(&self) -> u32 {
        self.value
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.field, other.field) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            field: self.field,
            value: self.field.add(self.value, other.value),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self {
            field: self.field,
            value: self.field.mul(self.value, other.value),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self {
            field: self.field,
            value: self.field.inv(self.value)?,
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        Self {
            field: self.field,
            value: self.field.pow(self.value, e),
        }
    }
}

impl PartialEq for ExtFieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.value == other.value
    }
}

impl std::fmt::Debug for ExtFieldElement<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#x}", self.value)
    }
}

/// Multiplicative order of 2 modulo odd `n`: the smallest extension degree s
/// with `n | 2^s - 1`.
pub fn order_of_two(n: u32) -> Result<u32> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    if n == 1 {
        return Err(Error::BadResidue { a: 1, n: 1 });
    }
    let mut pow = 2u64 % n as u64;
    let mut s = 1u32;
    while pow != 1 {
        pow = (pow * 2) % n as u64;
        s += 1;
        if s > 64 {
            return Err(Error::Inconsistency(format!("order of 2 mod {n} exceeds 64")));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive polynomial multiplication mod the field modulus, bit by bit.
    fn naive_mul(a: u32, b: u32, modulus: u32, s: u32) -> u32 {
        let mut acc: u64 = 0;
        for i in 0..s {
            if (b >> i) & 1 == 1 {
                acc ^= (a as u64) << i;
            }
        }
        for i in (s..2 * s).rev() {
            if (acc >> i) & 1 == 1 {
                acc ^= (modulus as u64) << (i - s);
            }
        }
        acc as u32
    }

    #[test]
    fn table_moduli_for_small_degrees() {
        assert_eq!(ExtField::new(2).unwrap().modulus(), 0x7);
        assert_eq!(ExtField::new(4).unwrap().modulus(), 0x13);
    }

    #[test]
    fn degree_out_of_range() {
        assert!(matches!(ExtField::new(1), Err(Error::DegreeOutOfRange(1))));
        assert!(matches!(ExtField::new(17), Err(Error::DegreeOutOfRange(17))));
    }

    #[test]
    fn every_supported_degree_builds_and_is_primitive() {
        for s in 2..=16 {
            // construction itself asserts that x has full order
            let f = ExtField::new(s).unwrap();
            assert_eq!(f.group_order(), (1 << s) - 1);
        }
    }

    #[test]
    fn gf16_inverses() {
        let f = ExtField::new(4).unwrap();
        for a in 1..16 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        assert!(f.inv(0).is_err());
    }

    #[test]
    fn gf16_root_of_unity_has_order_15() {
        let f = ExtField::new(4).unwrap();
        let beta = f.nth_root(15).unwrap();
        assert_eq!(f.pow(beta, 15), 1);
        for j in 1..15 {
            assert_ne!(f.pow(beta, j), 1);
        }
    }

    #[test]
    fn gf8_multiplication_table_matches_naive_reduction() {
        let f = ExtField::new(3).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(f.mul(a, b), naive_mul(a, b, f.modulus(), 3), "{a} * {b}");
            }
        }
    }

    #[test]
    fn order_of_two_examples() {
        assert_eq!(order_of_two(15).unwrap(), 4);
        assert_eq!(order_of_two(31).unwrap(), 5);
        assert_eq!(order_of_two(127).unwrap(), 7);
        assert_eq!(order_of_two(5).unwrap(), 4); // 5 | 15
        assert!(order_of_two(6).is_err());
    }

    #[test]
    fn minimal_polynomial_of_unity_class() {
        // beta^15 = 1, so the class of n=15 has minimal polynomial x + 1
        let f = ExtField::new(4).unwrap();
        assert_eq!(f.minimal_polynomial(15, 15).unwrap(), 0b11);
    }

    #[test]
    fn minimal_polynomial_degree_follows_orbit() {
        let f = ExtField::new(4).unwrap();
        // orbit of 5 mod 15 is {5, 10}
        let m5 = f.minimal_polynomial(15, 5).unwrap();
        assert_eq!(32 - m5.leading_zeros() - 1, 2);
        let m1 = f.minimal_polynomial(15, 1).unwrap();
        assert_eq!(32 - m1.leading_zeros() - 1, 4);
    }

    /// Polynomial long division over F2 as bit masks (oracle).
    fn poly_rem(mut num: u128, den: u128) -> u128 {
        let dd = 127 - den.leading_zeros();
        loop {
            if num == 0 {
                return 0;
            }
            let nd = 127 - num.leading_zeros();
            if nd < dd {
                return num;
            }
            num ^= den << (nd - dd);
        }
    }

    #[test]
    fn product_of_minimal_polynomials_is_xn_plus_1() {
        for (s, n) in [(4u32, 15u32), (4, 5), (5, 31), (6, 63), (6, 9)] {
            let f = ExtField::new(s).unwrap();
            let mut seen = vec![false; (n + 1) as usize];
            let mut product: u128 = 1;
            for a in 1..=n {
                if seen[a as usize] {
                    continue;
                }
                let mut x = a;
                loop {
                    seen[x as usize] = true;
                    x = (2 * x) % n;
                    if x == 0 {
                        x = n;
                    }
                    if x == a {
                        break;
                    }
                }
                let m = f.minimal_polynomial(n, a).unwrap() as u128;
                product = {
                    let mut acc = 0u128;
                    for i in 0..128 - m.leading_zeros() {
                        if (m >> i) & 1 == 1 {
                            acc ^= product << i;
                        }
                    }
                    acc
                };
            }
            let xn1 = (1u128 << n) | 1;
            assert_eq!(product, xn1, "s={s} n={n}");
            assert_eq!(poly_rem(xn1, product), 0);
        }
    }

    #[test]
    fn mixed_field_elements_rejected() {
        let f = ExtField::new(3).unwrap();
        let g = ExtField::new(3).unwrap();
        let a = f.element(3);
        let b = g.element(5);
        assert!(matches!(a.mul(&b), Err(Error::MixedFields)));
        let c = f.element(5);
        assert_eq!(a.mul(&c).unwrap().value(), f.mul(3, 5));
    }
}
