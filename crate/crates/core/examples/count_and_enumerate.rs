//! How many codes of each shape there are, and a listing of the smallest.

use zxcanon::{count_tableaus, count_zxcf_closed, count_zxcf_recursive, enumerate_zxcf, CountQuery};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>3} {:>30}", "n", "k", "codes");
    for n in [1, 2, 5, 10, 20] {
        let mut ks = vec![0, n / 2, n];
        ks.dedup();
        for k in ks {
            let q = CountQuery::fresh(n, k)?;
            let count = count_tableaus(n, k)?;
            assert_eq!(count, count_zxcf_recursive(q));
            assert_eq!(count, count_zxcf_closed(q));
            println!("{n:>3} {k:>3} {count:>30}");
        }
    }

    println!("\nall canonical diagrams with n=2, k=1:");
    for d in enumerate_zxcf(2, 1)? {
        println!("  {}", d.to_json());
    }
    Ok(())
}
