#include "fracgauss/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fracgauss/error.hpp"

namespace fracgauss {
namespace {

using nlohmann::json;

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j, const char* key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error(ErrorCode::kInvalidArgument, std::string("expected [re, im] for ") + key);
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json sum_json(const ExponentialSum& sum) {
    json j;
    j["label"] = sum.label;
    j["a"] = sum.a ? json(*sum.a) : json(nullptr);
    j["sigma"] = sum.sigma ? json(*sum.sigma) : json(nullptr);
    j["terms"] = json::array();
    for (const Term& term : sum.terms) {
        j["terms"].push_back({{"alpha", complex_json(term.alpha)}, {"gamma", complex_json(term.gamma)}});
    }
    return j;
}

json report_json(const SolveReport& report) {
    json residuals = json::array();
    for (const Complex& r : report.residuals) residuals.push_back(complex_json(r));
    return {{"model_order", report.model_order},
            {"max_abs_residual", report.max_abs_residual},
            {"svd_max", report.svd_max},
            {"svd_tail", report.svd_tail},
            {"merged_nodes", report.merged_nodes},
            {"flagged_nodes", report.flagged_nodes},
            {"residuals", residuals}};
}

void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

std::string sum_to_json(const ExponentialSum& sum, int indent) { return sum_json(sum).dump(indent); }

std::string report_to_json(const SolveReport& report, int indent) {
    return report_json(report).dump(indent);
}

std::string solution_to_json(const ExponentialSum& sum, const SolveReport& report, int indent) {
    json j = sum_json(sum);
    j["report"] = report_json(report);
    return j.dump(indent);
}

ExponentialSum sum_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::kInvalidArgument, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw Error(ErrorCode::kInvalidArgument, "sum JSON needs a \"terms\" array");
    }
    ExponentialSum sum;
    if (j.contains("label") && j["label"].is_string()) sum.label = j["label"].get<std::string>();
    for (const char* key : {"a", "sigma"}) {
        if (!j.contains(key) || j[key].is_null()) continue;
        if (!j[key].is_number()) {
            throw Error(ErrorCode::kInvalidArgument, std::string("\"") + key + "\" must be a number");
        }
        (std::string(key) == "a" ? sum.a : sum.sigma) = j[key].get<double>();
    }
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("alpha") || !t.contains("gamma")) {
            throw Error(ErrorCode::kInvalidArgument, "each term needs alpha and gamma");
        }
        sum.terms.push_back({complex_from(t["alpha"], "alpha"), complex_from(t["gamma"], "gamma")});
    }
    if (sum.terms.empty()) throw Error(ErrorCode::kInvalidArgument, "sum JSON has no terms");
    return sum;
}

std::string grid_to_csv(const ComplexGrid& grid, const ComplexGrid* exact) {
    if (exact && exact->values.size() != grid.values.size()) {
        throw Error(ErrorCode::kInvalidArgument, "grid_to_csv: column length mismatch");
    }
    std::string out = exact ? "axis,re,im,re_exact,im_exact\n" : "axis,re,im\n";
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        append_number(out, grid.axis[i]);
        for (const Complex* z : {&grid.values[i], exact ? &exact->values[i] : nullptr}) {
            if (!z) continue;
            out += ',';
            append_number(out, z->real());
            out += ',';
            append_number(out, z->imag());
        }
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::kIo, "cannot open " + tmp + " for writing");
        file << contents;
        file.close();
        if (!file) {
            std::remove(tmp.c_str());
            throw Error(ErrorCode::kIo, "write failed for " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw Error(ErrorCode::kIo, "cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIo, "cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

}  // namespace fracgauss
