#include "doctest.h"
#include "helpers.hpp"

#include "pexider/error.hpp"
#include "pexider/generator.hpp"
#include "pexider/serialize.hpp"

using namespace pexider;
using testing::iv;

TEST_CASE("same seed, same instance") {
    for (GenCase kind : {GenCase::Extremal, GenCase::TwoSided, GenCase::OneConstant, GenCase::Mutant}) {
        for (std::uint64_t seed : {0ULL, 1ULL, 77ULL, 0xffffffffffffffffULL}) {
            GenSpec spec;
            spec.kind = kind;
            spec.seed = seed;
            CHECK(dump_instance(generate(spec)) == dump_instance(generate(spec)));
        }
    }
    GenSpec a;
    a.kind = GenCase::TwoSided;
    a.seed = 1;
    GenSpec b = a;
    b.seed = 2;
    CHECK(generate(a) != generate(b));
}

TEST_CASE("generated endpoints stay inside the bounds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        GenSpec spec;
        spec.kind = static_cast<GenCase>(seed % 4);
        spec.seed = seed;
        spec.bounds = iv("[-2,3]");
        EquationInstance inst = generate(spec);
        for (const Interval& i : {inst.i1(), inst.i2()}) {
            if (i.lo().is_finite()) {
                CHECK(i.lo() >= ExtReal(-2));
            }
            if (i.hi().is_finite()) {
                CHECK(i.hi() <= ExtReal(3));
            }
        }
        CHECK(inst.f1().piece_count() <= 4);
        CHECK(inst.f2().piece_count() <= 4);
    }
}

TEST_CASE("symmetric generation") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GenSpec spec;
        spec.kind = seed % 2 == 0 ? GenCase::TwoSided : GenCase::Extremal;
        spec.seed = seed;
        spec.symmetric = true;
        EquationInstance inst = generate(spec);
        CHECK(inst.i1() == inst.i2());
        CHECK(inst.f1() == inst.f2());
    }
}

TEST_CASE("unsatisfiable specs are rejected") {
    GenSpec spec;
    spec.kind = GenCase::TwoSided;
    spec.bounds = iv("(-inf,3]");
    CHECK_THROWS_AS(generate(spec), DomainError);
    spec.bounds = iv("[1,1]");
    CHECK_THROWS_AS(generate(spec), DomainError);
    spec.bounds = iv("[-4,4]");
    spec.max_pieces = 1;
    CHECK_THROWS_AS(generate(spec), DomainError);
    spec.max_pieces = 4;
    spec.kind = GenCase::OneConstant;
    spec.symmetric = true;
    CHECK_THROWS_AS(generate(spec), DomainError);
}

TEST_CASE("case names") {
    for (GenCase kind : {GenCase::Extremal, GenCase::TwoSided, GenCase::OneConstant, GenCase::Mutant}) {
        CHECK(parse_gen_case(to_string(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_gen_case("three_sided"), ParseError);
}
