// emit.cpp

#include "diffspec/emit.hpp"

#include <sstream>

namespace diffspec {

namespace {

// Minimal JSON writer. Keys are appended in sorted order by the callers;
// values are primitives, raw decimal numbers, or nested objects.
class JsonObject {
public:
    void field(const std::string& key, const std::string& raw) {
        if (!first_) out_ << ",";
        first_ = false;
        out_ << '"' << key << "\":" << raw;
    }
    void field_string(const std::string& key, const std::string& s) {
        field(key, '"' + s + '"');
    }
    std::string str() const { return "{" + out_.str() + "}"; }

private:
    std::ostringstream out_;
    bool first_ = true;
};

std::string json_bool(bool b) { return b ? "true" : "false"; }

template <typename Map>
std::string json_count_map(const Map& m) {
    JsonObject obj;
    for (const auto& [k, v] : m) {
        // Keys of both maps are integers that ascend with the map order, so
        // lexicographic JSON key order is not guaranteed; emit in numeric
        // order, which is deterministic and self-describing.
        std::ostringstream key;
        key << k;
        obj.field(key.str(), std::to_string(v));
    }
    return obj.str();
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

} // namespace

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "table") return Format::table;
    throw error(errc::unsupported_params, "unknown format: " + s);
}

std::string emit(const DifferentialSpectrum& sp, Format fmt) {
    switch (fmt) {
        case Format::json: {
            JsonObject obj;
            obj.field("d", std::to_string(sp.d));
            obj.field("delta0", std::to_string(sp.delta0));
            obj.field("delta1", std::to_string(sp.delta1));
            obj.field("delta_max", std::to_string(sp.delta_max));
            obj.field("locally_apn", json_bool(sp.locally_apn));
            obj.field_string("modulus", sp.modulus_hex);
            obj.field("n", std::to_string(sp.n));
            obj.field("omega", json_count_map(sp.omega));
            return obj.str() + "\n";
        }
        case Format::csv: {
            // The wide row lists every even omega up to delta_max; refuse the
            // degenerate closed-form cases where that would be billions of
            // columns.
            if (sp.delta_max > 65536)
                throw error(errc::unsupported_params,
                            "CSV spectrum row impractical for delta_max > 65536; use json");
            std::ostringstream head, row;
            head << "n,d,delta_max";
            row << sp.n << ',' << sp.d << ',' << sp.delta_max;
            for (std::uint64_t i = 0; i <= sp.delta_max; i += 2) {
                head << ",omega_" << i;
                row << ',' << sp.omega_at(i);
            }
            return head.str() + "\n" + row.str() + "\n";
        }
        case Format::table: {
            std::ostringstream os;
            os << "differential spectrum of x^" << sp.d << " over F_2^" << sp.n
               << " (modulus " << sp.modulus_hex << ")\n";
            os << "  delta(0) = " << sp.delta0 << ", delta(1) = " << sp.delta1
               << ", delta_max = " << sp.delta_max
               << (sp.locally_apn ? ", locally APN" : "") << "\n";
            for (const auto& [i, w] : sp.omega)
                os << "  omega_" << i << " = " << w << "\n";
            return os.str();
        }
    }
    return {};
}

std::string emit(const KernelProfile& prof, Format fmt) {
    switch (fmt) {
        case Format::json: {
            JsonObject obj;
            obj.field("counts", json_count_map(prof.counts));
            obj.field("n", std::to_string(prof.n));
            obj.field("t", std::to_string(prof.t));
            return obj.str() + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "n,t,dim,count\n";
            for (const auto& [i, c] : prof.counts)
                os << prof.n << ',' << prof.t << ',' << i << ',' << c << "\n";
            return os.str();
        }
        case Format::table: {
            std::ostringstream os;
            os << "kernel dimensions of P_{" << prof.t << ",b} over F_2^"
               << prof.n << "\n";
            for (const auto& [i, c] : prof.counts)
                os << "  dim " << i << ": " << c << " values of b\n";
            return os.str();
        }
    }
    return {};
}

std::string emit(const KloostermanValue& kv, KloostermanMethod method, Format fmt) {
    const std::string method_name =
        method == KloostermanMethod::direct ? "direct" : "carlitz";
    switch (fmt) {
        case Format::json: {
            JsonObject obj;
            obj.field_string("method", method_name);
            obj.field("n", std::to_string(kv.n));
            obj.field("value", std::to_string(kv.value));
            return obj.str() + "\n";
        }
        case Format::csv:
            return "n,method,value\n" + std::to_string(kv.n) + "," + method_name +
                   "," + std::to_string(kv.value) + "\n";
        case Format::table: {
            std::ostringstream os;
            os << "K(1) over F_2^" << kv.n << " [" << method_name
               << "] = " << kv.value << "\n";
            return os.str();
        }
    }
    return {};
}

std::string emit(const CodeWeightCounts& cw, Format fmt) {
    switch (fmt) {
        case Format::json: {
            JsonObject obj;
            obj.field("b3", cw.b3.str());
            obj.field("b4", cw.b4.str());
            obj.field("n", std::to_string(cw.n));
            return obj.str() + "\n";
        }
        case Format::csv:
            return "n,b3,b4\n" + std::to_string(cw.n) + "," + cw.b3.str() + "," +
                   cw.b4.str() + "\n";
        case Format::table: {
            std::ostringstream os;
            os << "cyclic code of length 2^" << cw.n
               << "-1, defining set {1,7}\n"
               << "  weight-3 codewords: " << cw.b3.str() << "\n"
               << "  weight-4 codewords: " << cw.b4.str() << "\n";
            return os.str();
        }
    }
    return {};
}

std::string emit(const std::vector<ScanFinding>& findings, Format fmt) {
    switch (fmt) {
        case Format::json: {
            std::ostringstream os;
            os << "[";
            for (std::size_t i = 0; i < findings.size(); ++i) {
                if (i) os << ",";
                JsonObject obj;
                obj.field("apn", json_bool(findings[i].apn));
                obj.field("delta", std::to_string(findings[i].delta));
                obj.field("n", std::to_string(findings[i].n));
                obj.field("t", std::to_string(findings[i].t));
                os << obj.str();
            }
            os << "]\n";
            return os.str();
        }
        case Format::csv: {
            std::ostringstream os;
            os << "n,t,delta,apn\n";
            for (const auto& sf : findings)
                os << sf.n << ',' << sf.t << ',' << sf.delta << ','
                   << (sf.apn ? "true" : "false") << "\n";
            return os.str();
        }
        case Format::table: {
            std::ostringstream os;
            os << pad("n", 4) << pad("t", 4) << pad("delta", 8) << "apn\n";
            for (const auto& sf : findings)
                os << pad(std::to_string(sf.n), 4) << pad(std::to_string(sf.t), 4)
                   << pad(std::to_string(sf.delta), 8)
                   << (sf.apn ? "yes" : "no") << "\n";
            return os.str();
        }
    }
    return {};
}

std::string emit(const VerificationReport& report, Format fmt) {
    switch (fmt) {
        case Format::json: {
            std::ostringstream checks;
            checks << "[";
            for (std::size_t i = 0; i < report.checks.size(); ++i) {
                if (i) checks << ",";
                const auto& c = report.checks[i];
                JsonObject obj;
                obj.field_string("counterexample", c.counterexample);
                obj.field("n", std::to_string(c.n));
                obj.field_string("name", c.name);
                obj.field("pass", json_bool(c.pass));
                obj.field("t", std::to_string(c.t));
                checks << obj.str();
            }
            checks << "]";
            JsonObject obj;
            obj.field("all_passed", json_bool(report.all_passed));
            obj.field("checks", checks.str());
            obj.field("n_max", std::to_string(report.n_max));
            obj.field("n_min", std::to_string(report.n_min));
            return obj.str() + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "name,n,t,pass,counterexample\n";
            for (const auto& c : report.checks)
                os << c.name << ',' << c.n << ',' << c.t << ','
                   << (c.pass ? "true" : "false") << ',' << c.counterexample << "\n";
            return os.str();
        }
        case Format::table: {
            std::ostringstream os;
            os << pad("check", 24) << pad("n", 4) << pad("t", 4) << "result\n";
            for (const auto& c : report.checks) {
                os << pad(c.name, 24) << pad(std::to_string(c.n), 4)
                   << pad(c.t < 0 ? "-" : std::to_string(c.t), 4)
                   << (c.pass ? "pass" : "FAIL " + c.counterexample) << "\n";
            }
            os << (report.all_passed ? "all checks passed" : "FAILURES PRESENT")
               << "\n";
            return os.str();
        }
    }
    return {};
}

} // namespace diffspec
