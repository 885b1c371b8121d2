#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defdirac/closed_form.hpp"
#include "defdirac/radial.hpp"

namespace defdirac {

// 17 significant digits, '.' decimal point; round-trips doubles exactly.
std::string fmt17(double v);

enum class OutputFormat { csv, json };

// Column-ordered table with pre-formatted cells; serialization is
// deterministic byte-for-byte for identical inputs.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_json() const; // array of objects, keys = column names
    std::string serialize(OutputFormat f) const { return f == OutputFormat::csv ? to_csv() : to_json(); }
};

Table spectrum_table(const std::vector<SpectrumRecord>& records,
                     const std::vector<std::string>& statuses);

std::string wavefunction_csv(const WavefunctionSamples& ws);

} // namespace defdirac
