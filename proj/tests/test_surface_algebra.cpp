#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "reebforge/errors.hpp"
#include "reebforge/surface_algebra.hpp"

using namespace reebforge;

namespace {

SurfaceCollection replay(const CobordismCertificate& cert) {
    SurfaceCollection cur = cert.incoming;
    for (const HandleMove& move : cert.schedule) cur = apply_handle(cur, move);
    return cur;
}

/// All genus multisets with the given component count, genera in [0, max_genus].
void enumerate_multisets(int count, int max_genus,
                         const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> genera(static_cast<size_t>(count), 0);
    std::function<void(int, int)> rec = [&](int idx, int low) {
        if (idx == count) {
            fn(genera);
            return;
        }
        for (int g = low; g <= max_genus; ++g) {
            genera[static_cast<size_t>(idx)] = g;
            rec(idx + 1, g);
        }
    };
    rec(0, 0);
}

} // namespace

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(SurfaceCollection{}) == 0);
    CHECK(euler_characteristic(SurfaceCollection::from_genera({0})) == 2);
    CHECK(euler_characteristic(SurfaceCollection::from_genera({1, 2})) == -2);
}

TEST_CASE("apply_handle join merges genera") {
    SurfaceCollection s = SurfaceCollection::from_genera({1, 2});
    SurfaceCollection t = apply_handle(s, HandleMove::join(0, 1, 2));
    REQUIRE(t.size() == 1);
    CHECK(t.components()[0].genus == 3);
    CHECK(euler_characteristic(t) == euler_characteristic(s) - 2);
}

TEST_CASE("apply_handle add_genus turns a sphere into a torus") {
    SurfaceCollection s = SurfaceCollection::from_genera({0});
    SurfaceCollection t = apply_handle(s, HandleMove::add_genus(0));
    CHECK(t.genus_multiset() == std::vector<int>{1});
    CHECK(euler_characteristic(t) == 0);
}

TEST_CASE("apply_handle split partitions genus") {
    SurfaceCollection s = SurfaceCollection::from_genera({2});
    SurfaceCollection t = apply_handle(s, HandleMove::split(0, 1, 1, 1, 2));
    CHECK(t.genus_multiset() == std::vector<int>{1, 1});
    CHECK(euler_characteristic(t) == euler_characteristic(s) + 2);
}

TEST_CASE("illegal moves are rejected") {
    SurfaceCollection sphere = SurfaceCollection::from_genera({0});
    try {
        apply_handle(sphere, HandleMove::drop_genus(0));
        FAIL("expected IllegalMove");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IllegalMove);
    }
    try {
        apply_handle(sphere, HandleMove::add_genus(5));
        FAIL("expected UnknownComponent");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownComponent);
    }
    try {
        apply_handle(SurfaceCollection::from_genera({2}), HandleMove::split(0, 1, 0, 1, 2));
        FAIL("expected IllegalMove");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IllegalMove);
    }
}

TEST_CASE("sphere-to-sphere plan is the padded pair") {
    auto cert = plan_cobordism(SurfaceCollection::from_genera({0}),
                               SurfaceCollection::from_genera({0}), Rational(0));
    REQUIRE(cert.schedule.size() == 2);
    CHECK(cert.schedule[0].op == HandleMove::Op::AddGenus);
    CHECK(cert.schedule[1].op == HandleMove::Op::DropGenus);
    CHECK(cert.n1 == 1);
    CHECK(cert.n2 == 1);
    CHECK(certificate_chi(cert) == 2);
}

TEST_CASE("two tori to a genus-2 surface") {
    auto cert = plan_cobordism(SurfaceCollection::from_genera({1, 1}),
                               SurfaceCollection::from_genera({2}), Rational(0));
    CHECK(cert.n1 == 3);
    CHECK(cert.n2 == 2);
    CHECK(replay(cert).genus_multiset() == std::vector<int>{2});
    CHECK(certificate_chi(cert) == -1);
}

TEST_CASE("two spheres to three spheres") {
    auto cert = plan_cobordism(SurfaceCollection::from_genera({0, 0}),
                               SurfaceCollection::from_genera({0, 0, 0}), Rational(0));
    CHECK(cert.n1 == 1);
    CHECK(cert.n2 == 2);
    CHECK(replay(cert).genus_multiset() == std::vector<int>({0, 0, 0}));
}

TEST_CASE("torus to torus uses one drop and one add") {
    auto cert = plan_cobordism(SurfaceCollection::from_genera({1}),
                               SurfaceCollection::from_genera({1}), Rational(0));
    CHECK(cert.n1 == 1);
    CHECK(cert.n2 == 1);
    CHECK(certificate_chi(cert) == 0);
}

TEST_CASE("empty side is rejected") {
    try {
        plan_cobordism(SurfaceCollection{}, SurfaceCollection::from_genera({0}), Rational(0));
        FAIL("expected EmptySide");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptySide);
    }
}

TEST_CASE("chi changes by exactly 2 per move, exhaustively") {
    for (int nin = 1; nin <= 3; ++nin) {
        enumerate_multisets(nin, 3, [&](const std::vector<int>& in_genera) {
            for (int nout = 1; nout <= 3; ++nout) {
                enumerate_multisets(nout, 3, [&](const std::vector<int>& out_genera) {
                    auto s = SurfaceCollection::from_genera(in_genera);
                    auto t = SurfaceCollection::from_genera(out_genera);
                    auto cert = plan_cobordism(s, t, Rational(0));

                    REQUIRE_FALSE(cert.schedule.empty());
                    SurfaceCollection cur = cert.incoming;
                    for (const HandleMove& move : cert.schedule) {
                        int before = euler_characteristic(cur);
                        cur = apply_handle(cur, move);
                        int after = euler_characteristic(cur);
                        CHECK(after - before == (move.is_one_handle() ? -2 : 2));
                    }
                    CHECK(cur.genus_multiset() == t.genus_multiset());
                    CHECK(euler_characteristic(t) ==
                          euler_characteristic(s) - 2 * cert.n1 + 2 * cert.n2);
                    CHECK(cert.n1 + cert.n2 >= 1);
                    CHECK(cert.chi == certificate_chi(cert));

                    // one singular point per handle, indices matching kinds
                    REQUIRE(cert.singular_points.size() == cert.schedule.size());
                    for (size_t i = 0; i < cert.schedule.size(); ++i) {
                        CHECK(cert.singular_points[i].index ==
                              (cert.schedule[i].is_one_handle() ? 1 : 2));
                    }
                });
            }
        });
    }
}

TEST_CASE("outgoing components follow the target order") {
    auto t = SurfaceCollection::from_genera({3, 0, 2});
    auto cert = plan_cobordism(SurfaceCollection::from_genera({1}), t, Rational(0));
    REQUIRE(cert.outgoing.size() == 3);
    for (int j = 0; j < 3; ++j)
        CHECK(cert.outgoing.components()[static_cast<size_t>(j)].genus ==
              t.components()[static_cast<size_t>(j)].genus);
}
