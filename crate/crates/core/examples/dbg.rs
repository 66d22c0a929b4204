use involution_codes::cayley::{generating_set, is_edge};
use involution_codes::recursive::{gray_code_a, gray_code_b, gray_code_d};
fn main() {
    for (name, code, t) in [
        ("A5", gray_code_a(5).unwrap(), generating_set(involution_codes::GroupType::A, 5).unwrap()),
        ("B4", gray_code_b(4).unwrap(), generating_set(involution_codes::GroupType::B, 4).unwrap()),
        ("D4", gray_code_d(4).unwrap(), generating_set(involution_codes::GroupType::D, 4).unwrap()),
    ] {
        let mut bad = 0;
        for (u, v) in code.cyclic_pairs() {
            if !is_edge(u, v, &t) {
                if bad < 4 {
                    let q = u.inverse().compose(v);
                    println!("{name}: {u} -> {v}  quotient {q}");
                }
                bad += 1;
            }
        }
        println!("{name}: {bad} non-edges of {}", code.len());
    }
}
