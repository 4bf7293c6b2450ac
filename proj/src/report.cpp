#include "bperiod/report.hpp"

#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "bperiod/fisher_dist.hpp"
#include "bperiod/spectral.hpp"

namespace bperiod {

namespace {

std::string num(double v, NumberFormat f) {
    return f.full_precision ? fmt::format("{:.17g}", v) : fmt::format("{:.4f}", v);
}

}  // namespace

const char* to_string(Decision decision) noexcept {
    return decision == Decision::Reject ? "reject" : "accept";
}

TestReport run_test(const BinarySeries& series, std::size_t d, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("invalid level");
    const auto folded = fold(series, d);
    const auto g = fisher_g(folded.z);

    TestReport r;
    r.n = folded.n;
    r.d = d;
    r.q = g.q;
    r.blocks = folded.blocks;
    r.discarded = folded.discarded();
    r.alpha = alpha;
    r.statistic = g.value;
    r.degenerate = g.degenerate;
    r.argmax_j = g.argmax_j;
    r.p_exact = p_value(r.q, g);
    r.p_approx = p_value_approx(r.q, g);
    const auto cv = critical_value(r.q, alpha);
    r.k_alpha_exact = cv.exact;
    r.k_alpha_approx = cv.approx;
    r.decision = r.statistic > r.k_alpha_approx ? Decision::Reject : Decision::Accept;
    r.decision_exact = r.statistic > r.k_alpha_exact ? Decision::Reject : Decision::Accept;
    r.exact_tail_capped = !tail_is_exact(r.q);
    return r;
}

std::string format_text(const TestReport& r, NumberFormat f) {
    std::string out;
    out += fmt::format("n                 {}\n", r.n);
    out += fmt::format("d                 {}\n", r.d);
    out += fmt::format("q                 {}\n", r.q);
    out += fmt::format("blocks            {}\n", r.blocks);
    out += fmt::format("discarded         {}\n", r.discarded);
    out += fmt::format("alpha             {}\n", num(r.alpha, f));
    out += fmt::format("statistic         {}{}\n", num(r.statistic, f), r.degenerate ? " (degenerate)" : "");
    out += fmt::format("argmax j          {}\n", r.degenerate ? std::string("-") : std::to_string(r.argmax_j));
    out += fmt::format("k_alpha approx    {}\n", num(r.k_alpha_approx, f));
    out += fmt::format("k_alpha exact     {}\n", num(r.k_alpha_exact, f));
    out += fmt::format("p-value approx    {}\n", num(r.p_approx, f));
    out += fmt::format("p-value exact     {}\n", num(r.p_exact, f));
    out += fmt::format("decision          {} (leading-term critical value)\n", to_string(r.decision));
    out += fmt::format("decision exact    {}\n", to_string(r.decision_exact));
    if (r.exact_tail_capped) {
        out += fmt::format("warning: q > {}, exact tail replaced by the leading-term approximation\n", kMaxExactQ);
    }
    return out;
}

std::string csv_header_test() {
    return "n,d,q,blocks,discarded,alpha,statistic,degenerate,argmax_j,p_exact,p_approx,k_alpha_exact,"
           "k_alpha_approx,decision,decision_exact";
}

std::string format_csv(const TestReport& r, NumberFormat f) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}", r.n, r.d, r.q, r.blocks, r.discarded,
                       num(r.alpha, f), num(r.statistic, f), r.degenerate ? 1 : 0, r.argmax_j, num(r.p_exact, f),
                       num(r.p_approx, f), num(r.k_alpha_exact, f), num(r.k_alpha_approx, f),
                       to_string(r.decision), to_string(r.decision_exact));
}

std::string format_json(const TestReport& r) {
    nlohmann::json j = {
        {"n", r.n},
        {"d", r.d},
        {"q", r.q},
        {"blocks", r.blocks},
        {"discarded", r.discarded},
        {"alpha", r.alpha},
        {"statistic", r.statistic},
        {"degenerate", r.degenerate},
        {"argmax_j", r.argmax_j},
        {"p_exact", r.p_exact},
        {"p_approx", r.p_approx},
        {"k_alpha_exact", r.k_alpha_exact},
        {"k_alpha_approx", r.k_alpha_approx},
        {"decision", to_string(r.decision)},
        {"decision_exact", to_string(r.decision_exact)},
    };
    return j.dump(2);
}

std::string format_text(const AsymptoticSummary& s, NumberFormat f) {
    std::string out;
    out += fmt::format("r                 {}\n", s.r);
    out += fmt::format("d                 {}\n", s.d);
    out += fmt::format("b = gcd(r, d)     {}\n", s.b);
    out += fmt::format("effective period  {}\n", s.effective_period);
    out += fmt::format("regime            {}\n", to_string(s.regime));
    out += fmt::format("e in A            {}\n", s.e_in_A ? "yes" : "no");
    out += fmt::format("detect_sum        {} {} {}i ({})\n", num(s.detect_sum.real(), f),
                       s.detect_sum.imag() < 0 ? "-" : "+", num(std::abs(s.detect_sum.imag()), f),
                       to_string(s.detectability));
    out += fmt::format("limit g(e)        {}\n", s.limit_g ? num(*s.limit_g, f) : std::string("-"));
    out += "\n   i  e_i        v_i\n";
    for (std::size_t i = 0; i < s.e.size(); ++i) {
        out += fmt::format("{:4}  {}  {}\n", i + 1, num(s.e[i], f), num(s.v[i], f));
    }
    for (const auto& w : s.warnings) out += "warning: " + w + "\n";
    return out;
}

std::string format_csv(const AsymptoticSummary& s, NumberFormat f) {
    std::string out = "i,e,v,r,d,b,regime,e_in_A,detect_re,detect_im,limit_g\n";
    const std::string limit = s.limit_g ? num(*s.limit_g, f) : std::string();
    for (std::size_t i = 0; i < s.e.size(); ++i) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", i + 1, num(s.e[i], f), num(s.v[i], f), s.r, s.d,
                           s.b, to_string(s.regime), s.e_in_A ? 1 : 0, num(s.detect_sum.real(), f),
                           num(s.detect_sum.imag(), f), limit);
    }
    return out;
}

std::string format_text(const PowerTable& t, NumberFormat f) {
    std::string out = fmt::format("{}: {}\n", to_string(t.id), t.title);
    if (!t.rows.empty()) {
        const auto& s = t.rows.front().estimate;
        out += fmt::format("n={} d={} alpha={} replications={} seed={} k_alpha approx={} exact={}\n\n",
                           s.scenario.n, s.scenario.d, s.scenario.alpha, s.scenario.replications, s.scenario.seed,
                           num(s.k_alpha_approx, f), num(s.k_alpha_exact, f));
    }
    out += fmt::format("{:<10} {:>10} {:>10} {:>11} {:>9}\n", "cell", "rate", "std_error", "rejections", "seconds");
    for (const auto& row : t.rows) {
        const auto& e = row.estimate;
        out += fmt::format("{:<10} {:>10} {:>10} {:>11} {:>9.2f}\n", row.label, num(e.rate, f), num(e.std_error, f),
                           e.rejections, e.elapsed.count());
    }
    return out;
}

std::string format_csv(const PowerTable& t, NumberFormat f) {
    std::string out(kPowerCsvHeader);
    out += '\n';
    for (const auto& row : t.rows) {
        out += to_csv_row(row.estimate, f.full_precision ? 17 : 4);
        out += '\n';
    }
    return out;
}

}  // namespace bperiod
