#pragma once

#include "leibconf/cat2.hpp"
#include "leibconf/linfty.hpp"

namespace leibconf::dsl {

struct Span {
    int line = 1;
    int col = 1;
};

struct ParseError : error {
    ParseError(Span s, const std::string& what)
        : error("parse error at " + std::to_string(s.line) + ":" + std::to_string(s.col) + ": " +
                what),
          span(s) {}
    Span span;
};

// A parsed file: named declarations, resolved to core objects, plus the
// reference names needed to print the file back in canonical form.
struct Program {
    std::vector<std::pair<std::string, std::string>> order;  // (kind, name)

    std::map<std::string, ConfModule> modules;
    std::map<std::string, std::pair<std::string, std::string>> module_sums;  // name -> (a, b)
    std::map<std::string, GradedModule> gradeds;
    std::map<std::string, std::vector<std::pair<int, std::string>>> graded_parts;
    std::map<std::string, SesqMap> maps;

    struct AlgebraDecl {
        std::string module, bracket;
        LeibnizConfAlg value;
        bool operator==(const AlgebraDecl&) const = default;
    };
    std::map<std::string, AlgebraDecl> algebras;

    struct RepDecl {
        std::string algebra, module, left, right;
        ConfRep value;
        bool operator==(const RepDecl&) const = default;
    };
    std::map<std::string, RepDecl> reps;

    struct CochainDecl {
        std::string rep, map;  // map empty for degree 0
        Cochain value;
        bool operator==(const CochainDecl&) const = default;
    };
    std::map<std::string, CochainDecl> cochains;

    struct TwoTermDecl {
        std::string g0, g1, d, r00, r01, r10, r3;
        TwoTermAlg value;
        bool operator==(const TwoTermDecl&) const = default;
    };
    std::map<std::string, TwoTermDecl> twoterms;

    struct HomDecl {
        std::string from, to, f0, f1, f2;
        TwoTermHom value;
        bool operator==(const HomDecl&) const = default;
    };
    std::map<std::string, HomDecl> homs;

    struct CrossedDecl {
        std::string g, h, d, phil, phir;
        CrossedModule value;
        bool operator==(const CrossedDecl&) const = default;
    };
    std::map<std::string, CrossedDecl> crosseds;

    struct TwoAlgDecl {
        std::string c0, kernel, d, br0, br1, lk;
        TwoAlg value;
        bool operator==(const TwoAlgDecl&) const = default;
    };
    std::map<std::string, TwoAlgDecl> twoalgs;

    struct OpsDecl {
        std::string graded;
        bool shifted = false;
        std::vector<std::pair<int, std::string>> pieces;
        HomotopyOps value;
        bool operator==(const OpsDecl&) const = default;
    };
    std::map<std::string, OpsDecl> opsdecls;

    struct LCochainDecl {
        std::string ops;
        int degree = 0;
        std::vector<std::pair<int, std::string>> pieces;
        ConvElem value;
        bool operator==(const LCochainDecl&) const = default;
    };
    std::map<std::string, LCochainDecl> lcochains;

    bool operator==(const Program& o) const;
};

Program parse(const std::string& text);
std::string print(const Program& p);

// canonical text for individual core objects, as parsable declarations
std::string print_module(const std::string& name, const ConfModule& m);
std::string print_map(const std::string& name, const SesqMap& m);

// self-contained declaration sets for derived entities, parsable on their own
std::string print_algebra(const std::string& name, const LeibnizConfAlg& alg);
std::string print_rep(const std::string& name, const ConfRep& rep);
std::string print_cochain(const std::string& name, const std::string& rep_name, const Cochain& c,
                          bool with_rep = true);
std::string print_two_term(const std::string& name, const TwoTermAlg& a);
std::string print_crossed(const std::string& name, const CrossedModule& x);
std::string print_two_alg(const std::string& name, const TwoAlg& a);
std::string print_ops(const std::string& name, const HomotopyOps& ops);

}  // namespace leibconf::dsl
