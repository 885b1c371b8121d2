#include "defdirac/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace defdirac {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    for (size_t i = 0; i < columns.size(); ++i) {
        out += columns[i];
        out += (i + 1 < columns.size()) ? "," : "\n";
    }
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? "," : "\n";
        }
    }
    return out;
}

namespace {
bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end != nullptr && *end == '\0';
}
} // namespace

std::string Table::to_json() const {
    std::string out = "[\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        out += "  {";
        for (size_t i = 0; i < columns.size(); ++i) {
            out += "\"" + columns[i] + "\": ";
            const std::string& cell = rows[r][i];
            if (cell.empty())
                out += "null";
            else if (cell == "true" || cell == "false" || looks_numeric(cell))
                out += cell;
            else
                out += "\"" + cell + "\"";
            if (i + 1 < columns.size()) out += ", ";
        }
        out += r + 1 < rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

Table spectrum_table(const std::vector<SpectrumRecord>& records,
                     const std::vector<std::string>& statuses) {
    Table t;
    t.columns = {"k",         "n_r",      "branch",  "lambda",  "l_star",
                 "n",         "e_closed", "e_radical", "e_numeric", "quadratic_residual",
                 "radical_residual", "bound_ok", "level_exists", "node_count", "status"};
    for (size_t i = 0; i < records.size(); ++i) {
        const SpectrumRecord& rec = records[i];
        std::vector<std::string> row;
        row.push_back(std::to_string(rec.k));
        row.push_back(std::to_string(rec.n_r));
        row.push_back(to_string(rec.branch));
        row.push_back(fmt17(rec.lambda));
        row.push_back(fmt17(rec.l_star));
        row.push_back(fmt17(rec.n));
        row.push_back(fmt17(rec.e_closed));
        row.push_back(std::isfinite(rec.e_radical) ? fmt17(rec.e_radical) : "");
        row.push_back(rec.e_numeric ? fmt17(*rec.e_numeric) : "");
        row.push_back(fmt17(rec.quadratic_residual));
        row.push_back(std::isfinite(rec.radical_residual) ? fmt17(rec.radical_residual) : "");
        row.push_back(rec.bound_ok ? "true" : "false");
        row.push_back(rec.level_exists ? "true" : "false");
        row.push_back(rec.node_count ? std::to_string(*rec.node_count) : "");
        row.push_back(i < statuses.size() ? statuses[i] : "ok");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string wavefunction_csv(const WavefunctionSamples& ws) {
    std::string out = "# E=" + fmt17(ws.energy) + " k=" + std::to_string(ws.k) +
                      " n_r=" + std::to_string(ws.n_r) + " branch=" + to_string(ws.branch) +
                      " nu=" + fmt17(ws.nu) + " a=" + fmt17(ws.a) + "\n";
    out += "x,r,chi\n";
    for (size_t i = 0; i < ws.x.size(); ++i)
        out += fmt17(ws.x[i]) + "," + fmt17(ws.r[i]) + "," + fmt17(ws.chi[i]) + "\n";
    return out;
}

} // namespace defdirac
