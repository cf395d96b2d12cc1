#pragma once

#include <edl/io.hpp>
#include <edl/search.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edl {

enum class CheckId { vz, dsv11, fridman, rad3, biconn, prop34, gamma2r1, radconj, bipdi, prop54, bipbiconn, asymp_remark };
enum class Depth { formula_only, family_crosscheck, exhaustive };
enum class Verdict { confirmed, refuted, inconclusive };

/// Inclusive ranges. For gamma2r1 and radconj, r is the doubled radius.
struct ParamRange {
    int n_min = 0;
    int n_max = 0;
    int r_min = 0;
    int r_max = 0;

    bool contains(const ParamRange & inner) const;
    friend bool operator==(const ParamRange &, const ParamRange &) = default;
};

struct DepthSupport {
    Depth depth = Depth::formula_only;
    ParamRange range;
    bool extended = false;   // hour-scale, opt-in only
};

struct CheckInfo {
    CheckId id = CheckId::vz;
    std::string name;        // lower-case id, e.g. "rad3"
    std::string statement;   // "theorem", "conjecture", "theorem/conjecture", "proposition", "remark"
    std::string r_meaning;   // "radius", "outradius", "doubled radius"
    std::vector<DepthSupport> depths;
};

struct TheoremCheck {
    CheckId id = CheckId::vz;
    Depth depth = Depth::formula_only;
    /// Empty: the full supported range for the depth.
    std::optional<ParamRange> params;
    int threads = 1;
    bool allow_extended = false;
};

struct VerificationReport {
    CheckId id = CheckId::vz;
    Depth depth = Depth::formula_only;
    ParamRange params;
    Verdict verdict = Verdict::inconclusive;
    std::string scope;       // "theorem range", "conjecture range" or both
    int cases = 0;
    int vacuous_cases = 0;
    std::string detail;
    Json evidence = Json::array();
    std::optional<ExtremalCertificate> counterexample;
    std::int64_t runtime_ms = 0;
};

std::string check_name(CheckId id);
CheckId parse_check_name(const std::string & name);
std::string depth_name(Depth d);
Depth parse_depth(const std::string & name);
std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string & name);

const std::vector<CheckInfo> & list_checks();
const CheckInfo & check_info(CheckId id);

/// Throws DomainError for an unsupported depth and LimitError for parameters
/// outside the supported range (or an extended range without opt-in).
VerificationReport verify_theorem(const TheoremCheck & check);

/// e.g. "rad3-exhaustive-n6-6-r3-3.json".
std::string report_file_name(const VerificationReport & report);

Json to_json(const VerificationReport & report, bool include_timing = true);
VerificationReport verification_report_from_json(const Json & j);
Json to_json(const CheckInfo & info);

/// Markdown table, one row per report.
std::string summary_markdown(const std::vector<VerificationReport> & reports);

} // namespace edl
