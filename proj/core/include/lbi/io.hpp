#ifndef LBI_IO_HPP
#define LBI_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbi/probability.hpp"

namespace lbi {

/// Parse error carrying file, line and column context.
struct ParseError : std::runtime_error {
    ParseError(const std::string& file, std::size_t line, std::size_t column,
               const std::string& message);
};

/// Shortest decimal representation that parses back to the same double,
/// capped at 12 significant digits. Used for all emitted numbers so that
/// repeated runs are byte-identical.
std::string format_double(double v);

/// A joint sample read from CSV with header `x,y,count` or `x,y,prob`.
struct ParsedJoint {
    Alphabet instances;
    Alphabet labels;
    JointDistribution joint;
};

/// Read a joint CSV. Alphabets are inferred from distinct values in
/// first-appearance order unless declared alphabet files are supplied.
/// Accepts `z` as a synonym for the `y` column (observation joints).
ParsedJoint read_joint_csv(const std::string& path,
                           const std::optional<Alphabet>& instance_alphabet = {},
                           const std::optional<Alphabet>& label_alphabet = {});

/// Read an alphabet file: one name per line, or `name,value` lines.
Alphabet read_alphabet_file(const std::string& path);

/// Read a distribution CSV with header `x,prob`, or raw samples (one
/// numeric value per line, no header) binned onto the given bin count and
/// range. Returns the grid alphabet and the distribution over it.
struct ParsedDistribution {
    Alphabet alphabet;
    Distribution dist;
};
ParsedDistribution read_distribution_csv(const std::string& path,
                                         std::size_t bins, double range_lo,
                                         double range_hi);

}  // namespace lbi

#endif
