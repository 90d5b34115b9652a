//! Round trip through the word-file format: construct, write, read back,
//! verify, then corrupt the code and verify again.

use zecap::construct::{odd_run_code, verify_code};
use zecap::model::{parse_channel_spec, Code};

fn main() -> zecap::Result<()> {
    let channel = parse_channel_spec("00-01;00-11;01-11")?;
    let path = std::env::temp_dir().join("zecap-oddrun-9.txt");

    let code = odd_run_code(9, true)?;
    code.write_word_file(&path)?;
    let loaded = Code::read_word_file(&path)?;
    let report = verify_code(&loaded, &channel);
    println!(
        "{}: {} words, {} pairs checked, pass={}",
        path.display(),
        loaded.len(),
        report.checked_pairs,
        report.pass
    );

    // an even run breaks the code
    let mut words = loaded.words().to_vec();
    words.push("011000000".parse()?);
    let broken = Code::new(9, words, "oddrun plus 011000000")?;
    let report = verify_code(&broken, &channel);
    println!("with 011000000: pass={}, first failures:", report.pass);
    for (x, y) in report.failures.iter().take(3) {
        println!("  {x} ~ {y}");
    }
    println!("{}", serde_json::to_string(&report).expect("serializable"));
    Ok(())
}
