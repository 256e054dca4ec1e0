#include "lutzlab/surgery.hpp"

#include <doctest.h>

using namespace lutzlab;

TEST_CASE("twist-along-circle recipe") {
    Trace tr = run_recipe("twist-along-circle", 2);
    CHECK(tr.legal);
    REQUIRE(tr.final_state.pieces.size() == 1);
    CHECK(tr.final_state.pieces[0].has_tag("model-pi-lutz-tube"));
    CHECK(tr.final_state.pieces[0].has_tag("blob-family"));
    CHECK(tr.steps.size() == 5);
    // printed operation labels present in order
    CHECK(tr.steps[0].note == "Operation 1");
    CHECK(tr.steps[3].note == "Operation 2");
    // step kinds exactly as printed
    CHECK(tr.steps[0].kind == SurgeryStep::Kind::PushOffIsotropic);
    CHECK(tr.steps[1].kind == SurgeryStep::Kind::PushOffIsotropic);
    CHECK(tr.steps[2].kind == SurgeryStep::Kind::RoundIndex1);
    CHECK(tr.steps[3].kind == SurgeryStep::Kind::XiRoundToConvex);
    CHECK(tr.steps[4].kind == SurgeryStep::Kind::RoundIndex2n);
}

TEST_CASE("twist-along-hypersurface recipe") {
    Trace tr = run_recipe("twist-along-hypersurface", 3);
    CHECK(tr.legal);
    REQUIRE(tr.final_state.pieces.size() == 1);
    CHECK(tr.final_state.pieces[0].has_tag("wide-giroux-domain"));
    CHECK(tr.steps.size() == 6);
    CHECK(tr.steps[0].note == "Operation 1");
    CHECK(tr.steps[2].note == "Operation 2");
    CHECK(tr.steps[4].note == "Operation 3");
}

TEST_CASE("empty recipe is the identity") {
    Trace tr = run_recipe("empty", 2);
    CHECK(tr.legal);
    CHECK(tr.steps.empty());
    CHECK(tr.final_state.pieces.size() == 1);
    CHECK(tr.final_state.pieces[0].tags.empty());
}

TEST_CASE("illegal steps are rejected with the violated precondition") {
    TraceState st;
    PieceDescriptor m{"M",
                      5,
                      {},
                      {{Feature::Kind::XiRoundHypersurface, "H", "", ""},
                       {Feature::Kind::TransverseCircle, "gamma", "", ""}},
                      {}};
    st.pieces = {m};

    // index-2n before the convex perturbation: tag missing
    CHECK_THROWS_AS(apply_step(st, {SurgeryStep::Kind::RoundIndex2n, "H", "", ""}), IllegalStep);

    // index-1 needs isotropic circles, not transverse ones
    CHECK_THROWS_AS(apply_step(st, {SurgeryStep::Kind::RoundIndex1, "gamma", "gamma", ""}),
                    IllegalStep);

    // unknown feature
    CHECK_THROWS_AS(apply_step(st, {SurgeryStep::Kind::PushOffIsotropic, "nope", "L", ""}),
                    IllegalStep);

    // after the perturbation the surgery becomes legal
    TraceState st2 = apply_step(st, {SurgeryStep::Kind::XiRoundToConvex, "H", "", ""});
    CHECK_NOTHROW(apply_step(st2, {SurgeryStep::Kind::RoundIndex2n, "H", "", ""}));
}

TEST_CASE("push-offs convert between circle kinds") {
    TraceState st;
    PieceDescriptor m{"M", 5, {}, {{Feature::Kind::TransverseCircle, "gamma", "", ""}}, {}};
    st.pieces = {m};
    st = apply_step(st, {SurgeryStep::Kind::PushOffIsotropic, "gamma", "L", ""});
    const Feature* l = st.pieces[0].find("L");
    REQUIRE(l != nullptr);
    CHECK(l->kind == Feature::Kind::IsotropicCircle);
    CHECK(!l->framing.empty());
    // and back: a transverse push-off of the isotropic circle
    st = apply_step(st, {SurgeryStep::Kind::PushOffTransverse, "L", "T+", ""});
    const Feature* t = st.pieces[0].find("T+");
    REQUIRE(t != nullptr);
    CHECK(t->kind == Feature::Kind::TransverseCircle);
    // wrong source kinds are rejected
    CHECK_THROWS_AS(apply_step(st, {SurgeryStep::Kind::PushOffTransverse, "gamma", "X", ""}),
                    IllegalStep);
}

TEST_CASE("apply_step is deterministic and pure") {
    Trace a = run_recipe("twist-along-circle", 2);
    Trace b = run_recipe("twist-along-circle", 2);
    REQUIRE(a.log.size() == b.log.size());
    for (size_t i = 0; i < a.log.size(); ++i) CHECK(a.log[i] == b.log[i]);
    CHECK(a.final_state.pieces[0].name == b.final_state.pieces[0].name);
}
