#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "lbi/io.hpp"

using namespace lbi;

namespace {

std::string fixture(const std::string& name) {
    return std::string(LBI_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

std::string error_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("format_double") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(format_double(100.0) == "100");
    // shortest representation that parses back exactly when 12 significant
    // digits suffice
    for (double v : {0.1, 1e-9, 123456.789, 0.333333333333}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
        CHECK(s.size() <= 18);
    }
    // values needing more than 12 digits are capped but stay close
    for (double v : {1.0 / 3.0, -7.0 / 11.0}) {
        CHECK(std::stod(format_double(v)) == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("joint CSV with probabilities") {
    const ParsedJoint p = read_joint_csv(fixture("joint_example_2x2.csv"));
    CHECK(p.instances.size() == 2);
    CHECK(p.instances.name(0) == "x0");
    CHECK(p.labels.name(1) == "y1");
    CHECK(p.joint.at(0, 0) == doctest::Approx(0.45));
    CHECK(p.joint.at(0, 1) == doctest::Approx(0.05));
    CHECK(p.joint.at(1, 0) == doctest::Approx(0.15));
    CHECK(p.joint.at(1, 1) == doctest::Approx(0.35));
    CHECK_FALSE(p.joint.counts().has_value());
}

TEST_CASE("joint CSV with counts keeps the counts") {
    const ParsedJoint p = read_joint_csv(fixture("joint_3x2_counts.csv"));
    CHECK(p.instances.size() == 3);
    CHECK(p.labels.size() == 2);
    REQUIRE(p.joint.counts().has_value());
    CHECK((*p.joint.counts())[0] == 6.0);
}

TEST_CASE("observation header and duplicate cells") {
    const std::string path = write_temp(
        "lbi_dup.csv", "x,z,count\na,u,2\na,u,3\nb,u,5\n");
    const ParsedJoint p = read_joint_csv(path);
    CHECK(p.joint.at(0, 0) == doctest::Approx(0.5));
    CHECK((*p.joint.counts())[0] == 5.0);
}

TEST_CASE("numeric cell names are ordered by value") {
    const std::string path = write_temp(
        "lbi_numeric.csv", "x,y,prob\n2,a,0.25\n0.5,a,0.5\n1,b,0.25\n");
    const ParsedJoint p = read_joint_csv(path);
    CHECK(p.instances.name(0) == "0.5");
    CHECK(p.instances.name(1) == "1");
    CHECK(p.instances.name(2) == "2");
    CHECK(p.instances.value(2) == doctest::Approx(2.0));
    CHECK(p.joint.at(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("parse errors carry file, line and column") {
    const std::string bad_header = write_temp("lbi_h.csv", "a,b,c\nx,y,1\n");
    CHECK(error_message([&] { read_joint_csv(bad_header); })
              .find(":1:1: expected header") != std::string::npos);

    const std::string bad_value = write_temp("lbi_v.csv", "x,y,prob\na,u,oops\n");
    const std::string msg = error_message([&] { read_joint_csv(bad_value); });
    CHECK(msg.find(":2:5:") != std::string::npos);
    CHECK(msg.find("expected a number") != std::string::npos);

    const std::string negative = write_temp("lbi_n.csv", "x,y,prob\na,u,-0.5\n");
    CHECK(error_message([&] { read_joint_csv(negative); })
              .find("negative value") != std::string::npos);

    const std::string frac = write_temp("lbi_f.csv", "x,y,count\na,u,1.5\n");
    CHECK(error_message([&] { read_joint_csv(frac); })
              .find("count is not an integer") != std::string::npos);

    const std::string empty = write_temp("lbi_e.csv", "x,y,prob\n");
    CHECK(error_message([&] { read_joint_csv(empty); })
              .find("no data rows") != std::string::npos);
}

TEST_CASE("declared alphabets") {
    const std::string alpha = write_temp("lbi_alpha.txt", "a,0\nb,1\nc,2\n");
    const Alphabet a = read_alphabet_file(alpha);
    CHECK(a.size() == 3);
    CHECK(a.name(2) == "c");
    CHECK(a.value(1) == doctest::Approx(1.0));

    const std::string names_only = write_temp("lbi_names.txt", "u\nv\n");
    const Alphabet b = read_alphabet_file(names_only);
    CHECK(b.value(1) == doctest::Approx(1.0));

    const std::string joint = write_temp("lbi_decl.csv", "x,y,prob\na,u,0.5\nb,v,0.5\n");
    const ParsedJoint p = read_joint_csv(joint, a, b);
    CHECK(p.instances.size() == 3);     // declared, not inferred
    CHECK(p.joint.at(2, 0) == doctest::Approx(0.0));

    const std::string unknown = write_temp("lbi_unk.csv", "x,y,prob\nzzz,u,1\n");
    CHECK(error_message([&] { read_joint_csv(unknown, a, b); })
              .find("not in declared alphabet") != std::string::npos);
}

TEST_CASE("distribution CSV with explicit grid") {
    const ParsedDistribution p = read_distribution_csv(fixture("sampling_gauss_30.csv"), 30, 0, 30);
    CHECK(p.alphabet.size() == 30);
    CHECK(p.alphabet.value(0) == doctest::Approx(0.5));
    CHECK(p.alphabet.value(29) == doctest::Approx(29.5));
    double sum = 0.0;
    for (double v : p.dist) sum += v;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("raw samples are binned to the nearest representative") {
    const std::string path = write_temp("lbi_raw.csv", "0.3\n1.7\n2.2\n9.9\n9.0\n");
    const ParsedDistribution p = read_distribution_csv(path, 5, 0, 10);
    CHECK(p.alphabet.size() == 5);
    CHECK(p.dist[0] == doctest::Approx(0.4));   // 0.3 and 1.7 -> bin at 1
    CHECK(p.dist[1] == doctest::Approx(0.2));   // 2.2 -> bin at 3
    CHECK(p.dist[4] == doctest::Approx(0.4));   // 9.0 and 9.9 -> bin at 9
}
