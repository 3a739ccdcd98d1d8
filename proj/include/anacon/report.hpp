#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anacon/bounds.hpp"
#include "anacon/solver.hpp"

// Result records and their two renderings: a human-readable table and a
// JSON document.  The JSON rendering is byte-deterministic: floats are
// printed with %.17g (round-trip exact), key order is fixed, and wall-clock
// timings are only included on request so that identical runs produce
// identical bytes.

namespace anacon {

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_g(double v, int precision = 10) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

// Append-only JSON emitter.  Enough for this project's output; parsing is
// someone else's job.
class JsonWriter {
public:
    JsonWriter& begin_object() { pre(); out_ += '{'; first_.push_back(true); return *this; }
    JsonWriter& end_object() { out_ += '}'; first_.pop_back(); return *this; }
    JsonWriter& begin_array() { pre(); out_ += '['; first_.push_back(true); return *this; }
    JsonWriter& end_array() { out_ += ']'; first_.pop_back(); return *this; }

    JsonWriter& key(std::string_view k) {
        sep();
        quoted(k);
        out_ += ':';
        after_key_ = true;
        return *this;
    }
    JsonWriter& value(std::string_view v) { pre(); quoted(v); return *this; }
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& value(double v) {
        pre();
        out_ += std::isfinite(v) ? fmt_g17(v) : "null";
        return *this;
    }
    JsonWriter& value(bool v) { pre(); out_ += v ? "true" : "false"; return *this; }
    JsonWriter& value(long long v) { pre(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
    JsonWriter& value(std::uint64_t v) { pre(); out_ += std::to_string(v); return *this; }

    const std::string& str() const { return out_; }

private:
    void sep() {
        if (first_.empty()) return;
        if (first_.back()) first_.back() = false;
        else out_ += ',';
    }
    void pre() {
        if (after_key_) { after_key_ = false; return; }
        sep();
    }
    void quoted(std::string_view s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                case '\r': out_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += c;
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<char> first_;
    bool after_key_ = false;
};

struct PhaseTimings {
    double parse = 0.0;
    double solve = 0.0;
    double verify = 0.0;
    double total = 0.0;
};

struct RunRecord {
    std::string input;  // file path, or "-" for stdin
    int n = 0, k = 0, m = 0;
    SolverConfig config;
    AlphaResult result;
    std::optional<BoundReport> bounds;
    PhaseTimings timings;
    bool include_timings = false;  // timings break byte-for-byte reproducibility
};

inline std::string render_json(const RunRecord& r) {
    JsonWriter w;
    w.begin_object();
    w.key("format").value("anacon-result");
    w.key("version").value(1);
    w.key("input").begin_object();
    w.key("path").value(r.input);
    w.key("n").value(r.n);
    w.key("k").value(r.k);
    w.key("m").value(r.m);
    w.end_object();
    w.key("config").begin_object();
    w.key("tol").value(r.config.tol);
    w.key("max_iter").value(r.config.max_iter);
    w.key("restarts").value(r.config.restarts);
    w.key("eps_initial").value(r.config.eps_initial);
    w.key("eps_halving_period").value(r.config.eps_halving_period);
    w.key("eps_floor").value(r.config.eps_floor);
    w.key("seed").value(r.config.seed);
    w.key("step0").value(r.config.step0);
    w.end_object();
    w.key("alpha").value(r.result.alpha);
    w.key("argmin_j").value(r.result.argmin);
    w.key("per_j").begin_array();
    for (const SolveOutcome& o : r.result.per_vertex) {
        w.begin_object();
        w.key("excluded").value(o.excluded);
        w.key("value").value(o.value);
        w.key("kkt").value(o.kkt);
        w.key("iterations").value(o.iterations);
        w.key("converged").value(o.converged);
        w.key("minimizer").begin_array();
        for (double x : o.minimizer.x) w.value(x);
        w.end_array();
        w.end_object();
    }
    w.end_array();
    if (r.bounds) {
        const BoundReport& b = *r.bounds;
        w.key("bounds").begin_object();
        w.key("alpha").value(b.alpha);
        w.key("slack").value(b.slack);
        w.key("connected").value(b.connected);
        w.key("all_pass").value(b.all_pass());
        w.key("checks").begin_array();
        for (const BoundCheck& c : b.checks) {
            w.begin_object();
            w.key("name").value(c.name);
            w.key("applicable").value(c.applicable);
            if (c.applicable) {
                w.key("pass").value(c.pass);
                w.key("bound").value(c.bound);
            }
            if (!c.note.empty()) w.key("note").value(c.note);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    if (r.include_timings) {
        w.key("timings").begin_object();
        w.key("parse_s").value(r.timings.parse);
        w.key("solve_s").value(r.timings.solve);
        w.key("verify_s").value(r.timings.verify);
        w.key("total_s").value(r.timings.total);
        w.end_object();
    }
    w.end_object();
    std::string s = w.str();
    s += '\n';
    return s;
}

inline std::string render_human(const RunRecord& r) {
    std::string out;
    out += "input: " + r.input + " (n=" + std::to_string(r.n) + ", k=" + std::to_string(r.k) +
           ", m=" + std::to_string(r.m) + ")\n";
    out += "alpha: " + fmt_g(r.result.alpha, 12) + " (attained at j=" +
           std::to_string(r.result.argmin) + ")\n";
    out += "subproblems:\n";
    out += "  j     value            kkt        iters   converged\n";
    for (const SolveOutcome& o : r.result.per_vertex) {
        char line[128];
        std::snprintf(line, sizeof line, "  %-5d %-16.10g %-10.2e %-7lld %s\n", o.excluded,
                      o.value, o.kkt, o.iterations, o.converged ? "yes" : "NO");
        out += line;
    }
    const SolveOutcome& bestj = r.result.per_vertex[static_cast<std::size_t>(r.result.argmin - 1)];
    out += "minimizer (j=" + std::to_string(r.result.argmin) + "): [";
    for (std::size_t i = 0; i < bestj.minimizer.x.size(); ++i) {
        if (i) out += ", ";
        out += fmt_g(bestj.minimizer.x[i], 8);
    }
    out += "]\n";
    if (r.bounds) {
        const BoundReport& b = *r.bounds;
        out += "bounds (slack " + fmt_g(b.slack, 6) + "): ";
        out += b.all_pass() ? "PASS\n" : "FAIL\n";
        for (const BoundCheck& c : b.checks) {
            char line[256];
            if (c.applicable)
                std::snprintf(line, sizeof line, "  [%s] %-24s bound %-14.8g %s\n",
                              c.pass ? "pass" : "FAIL", c.name.c_str(), c.bound, c.note.c_str());
            else
                std::snprintf(line, sizeof line, "  [  - ] %-24s not applicable: %s\n",
                              c.name.c_str(), c.note.c_str());
            out += line;
        }
    }
    if (r.include_timings) {
        out += "timings: parse " + fmt_g(r.timings.parse, 3) + "s, solve " +
               fmt_g(r.timings.solve, 3) + "s, verify " + fmt_g(r.timings.verify, 3) +
               "s, total " + fmt_g(r.timings.total, 3) + "s\n";
    }
    return out;
}

}  // namespace anacon
