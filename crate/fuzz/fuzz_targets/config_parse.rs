#![no_main]

use libfuzzer_sys::fuzz_target;
use ulmc_ts::experiments::ScenarioConfig;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(config) = ScenarioConfig::from_toml_str(text) {
        // Anything accepted must serialize and parse back to the same value.
        let again = ScenarioConfig::from_toml_str(&config.to_toml_string().unwrap()).unwrap();
        assert_eq!(config, again);
        let _ = config.variants().unwrap();
    }
});
