// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "maform/formats.hpp"
#include "maform/residue_graph.hpp"
#include "maform/selftest.hpp"
#include "maform/synthesis.hpp"

namespace {

using namespace maform;

// '-' reads standard input.
std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_normalized(const std::string& word, const std::string& form) {
    MAForm m = normalize(word);
    if (form == "ma") {
        std::cout << m.str() << " t=" << m.t_count() << " h=" << h_count(m) << "\n";
    } else if (form == "et") {
        ETForm e = to_et(m);
        std::cout << e.str() << " t=" << e.t_count() << "\n";
    } else if (form == "xyz") {
        XYZForm x = to_xyz(m);
        std::cout << x.str() << " t=" << x.t_count() << "\n";
    } else if (form == "bs") {
        BSForm b = to_bs(m);
        std::cout << b.str() << " t=" << b.t_count() << "\n";
    } else {
        throw ParseError("unknown form: " + form);
    }
}

void print_counts(const std::string& word, bool report) {
    Mat2 u = eval(parse_word(word));
    if (report) {
        std::cout << node_report(u) << "\n";
        return;
    }
    const ResidueNode& n = classify_residue(u);
    long two_k = 2L * u.lde();
    std::cout << "k=" << u.lde() << " t=" << (two_k - n.dt) << " h=" << (two_k - n.dh)
              << " node=" << n.id << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Clifford+T normal forms, synthesis and analysis"};
    app.require_subcommand(1);

    std::string word, form = "ma", so3_path, u2_path, to_form;
    bool each_line = false, verify = false, report = false;
    unsigned tcount = 0;
    std::uint64_t seed = 0;

    auto* c_norm = app.add_subcommand("normalize", "reduce a gate word to normal form");
    c_norm->add_option("word", word, "gate word over H,S,T,X,Y,Z,W,E");
    c_norm->add_option("--form", form, "output form: ma|et|xyz|bs");
    c_norm->add_flag("--each-line", each_line, "read words from stdin, one per line");

    auto* c_conv = app.add_subcommand("convert", "normalize into an alternative form");
    c_conv->add_option("word", word)->required();
    c_conv->add_option("--to", to_form, "target form: ma|et|xyz|bs")->required();

    auto* c_synth = app.add_subcommand("synth", "synthesize a normal form from a matrix");
    auto* so3_opt = c_synth->add_option("--so3", so3_path, "SO(3) matrix file ('-' = stdin)");
    auto* u2_opt = c_synth->add_option("--u2", u2_path, "U(2) matrix file ('-' = stdin)");
    c_synth->add_flag("--verify", verify, "re-evaluate the result and compare exactly");

    auto* c_mat = app.add_subcommand("matrix", "exact unitary of a gate word");
    c_mat->add_option("word", word);

    auto* c_bloch = app.add_subcommand("bloch", "exact Bloch matrix of a gate word");
    c_bloch->add_option("word", word);

    auto* c_counts = app.add_subcommand("counts", "T/H-count analysis via residues");
    c_counts->add_option("word", word);
    c_counts->add_flag("--report", report, "print the full node report line");
    c_counts->add_flag("--each-line", each_line);

    app.add_subcommand("cliffords", "list the 192 Clifford canonical tuples");
    app.add_subcommand("selftest", "run the embedded consistency suite");

    auto* c_rand = app.add_subcommand("rand", "emit a reproducible random normal-form word");
    c_rand->add_option("--tcount", tcount, "T-count of the form")->required();
    c_rand->add_option("--seed", seed, "random seed")->required();

    CLI11_PARSE(app, argc, argv);

    if (c_norm->parsed()) {
        if (each_line) {
            std::string line;
            while (std::getline(std::cin, line)) print_normalized(line, form);
        } else {
            print_normalized(word, form);
        }
    } else if (c_conv->parsed()) {
        print_normalized(word, to_form);
    } else if (c_synth->parsed()) {
        if ((so3_opt->count() > 0) == (u2_opt->count() > 0))
            throw ParseError("synth: exactly one of --so3 or --u2 is required");
        if (so3_opt->count() > 0) {
            Mat3 v = parse_mat3(read_input(so3_path));
            MAForm m = synth_so3(v);
            if (verify && !(bloch(eval(m)) == v))
                throw InternalError("synth: verification failed");
            std::cout << m.str() << "\n";
        } else {
            Mat2 u = parse_mat2(read_input(u2_path));
            MAForm m = synth_u2(u);
            if (verify && !(eval(m) == u))
                throw InternalError("synth: verification failed");
            std::cout << m.str() << "\n";
        }
    } else if (c_mat->parsed()) {
        std::cout << eval(parse_word(word)).str() << "\n";
    } else if (c_bloch->parsed()) {
        std::cout << bloch(eval(parse_word(word))).str() << "\n";
    } else if (c_counts->parsed()) {
        if (each_line) {
            std::string line;
            while (std::getline(std::cin, line)) print_counts(line, report);
        } else {
            print_counts(word, report);
        }
    } else if (app.get_subcommand("cliffords")->parsed()) {
        for (const CliffordElt& e : enumerate_cliffords()) std::cout << e.str() << "\n";
    } else if (app.get_subcommand("selftest")->parsed()) {
        return run_selftest(std::cout) ? 0 : 1;
    } else if (c_rand->parsed()) {
        std::mt19937_64 rng(seed);
        std::cout << word_str(expand(random_maform(rng, tcount))) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const maform::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const maform::PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const maform::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
