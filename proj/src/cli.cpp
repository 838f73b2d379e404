#include "antiflip/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "antiflip/embeddings.hpp"
#include "antiflip/errors.hpp"
#include "antiflip/json_io.hpp"

namespace antiflip {

namespace {

using nlohmann::json;
namespace js = antiflip::json;

enum class Format { text, json, dot };

Integer number(const std::string& s) { return Integer::parse(s); }

std::vector<Integer> number_list(const std::string& s) {
    std::vector<Integer> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(number(item));
    if (out.empty() || s.back() == ',') throw DomainError("malformed chain '" + s + "'");
    return out;
}

std::size_t count_of(const std::string& s) {
    Integer k = number(s);
    if (k < 1 || k > 1000000) throw DomainError("--count must be between 1 and 1000000, got " + s);
    return static_cast<std::size_t>(k.small_value());
}

std::string ball(const WahlPair& w) {
    if (w.is_smooth()) return kSmooth;
    return "B_{" + w.m().str() + "," + w.a().str() + "}";
}

std::string dot_of(const ResolutionChain& r, const std::string& name) { return to_dot(r.chain, r.contracted, name); }

std::string dot_of_wahl(const WahlPair& w, const std::string& name) {
    CFrac c = wahl_chain(w);
    return to_dot(Chain(c), std::vector<bool>(c.size(), true), name);
}

[[noreturn]] void no_dot(const char* what) {
    throw DomainError(std::string("--format dot is not available for ") + what + " (the result is not a chain)");
}

std::string member_line(const MoriStep& s) {
    return "E" + std::to_string(s.index) + " " + s.nbhd.w1().str() + "," + s.nbhd.w2().str() + " " + display(s.nbhd);
}

void print_report(const EmbeddingReport& r, Format fmt, std::ostream& out) {
    if (fmt == Format::json) {
        out << js::encode(r).dump(2) << "\n";
        return;
    }
    if (fmt == Format::dot) {
        for (const auto& s : r.steps) {
            out << dot_of(resolution_chain(s.step.nbhd),
                          "F" + std::to_string(s.family) + "E" + std::to_string(s.step.index));
        }
        return;
    }
    out << "target " << describe(r.target);
    if (const auto* m = std::get_if<MilnorFiber>(&r.target)) out << ", Q " << m->q_type.str();
    out << "\n";
    if (r.steps.empty()) {
        out << "no embeddings: " << r.reason << "\n";
        return;
    }
    out << "delta " << r.delta->str() << ", " << (r.infinite ? "infinite" : "finite") << ", "
        << simplicity_name(r.simplicity) << "\n";
    bool families = r.steps.back().family > 1;
    std::size_t last = 0;
    for (const auto& s : r.steps) {
        if (families && s.family != last) out << "family " << s.family << "\n";
        last = s.family;
        out << (families ? "  " : "") << "E" << s.step.index << " " << ball(s.canonical1) << " \u2294 " << ball(s.canonical2)
            << "  " << display(s.step.nbhd) << "\n";
    }
}

struct Args {
    std::string n, a, m1, a1, m2, a2, list, count = "5", curve;
    std::vector<std::string> wahl;
};

WahlPair wahl_option(const std::vector<std::string>& v) {
    if (v.size() != 2) throw DomainError("--wahl takes two integers M A");
    return WahlPair(number(v[0]), number(v[1]));
}

void build(CLI::App& app, Args& args, std::string& format, std::function<void(std::ostream&)>& action) {
    app.require_subcommand(1);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

    auto fmt = [&format] { return format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text; };
    auto group = [&app](const char* name, const char* help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [](CLI::App* g, const char* name, const char* help) {
        CLI::App* s = g->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    CLI::App* hj = group("hj", "Hirzebruch-Jung continued fractions");
    CLI::App* s = leaf(hj, "expand", "Expand N/A");
    s->add_option("N", args.n)->required();
    s->add_option("A", args.a)->required();
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            Fraction f(number(args.n), number(args.a));
            CFrac c = hj_expand(f);
            if (fmt() == Format::json) out << json{{"fraction", js::encode(f)}, {"chain", js::encode(c)}}.dump() << "\n";
            else if (fmt() == Format::dot) out << to_dot(Chain(c));
            else out << c.str() << "\n";
        };
    });
    s = leaf(hj, "eval", "Evaluate [E1,E2,...]");
    s->add_option("E", args.list, "Comma-separated entries")->required();
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            CFrac c(number_list(args.list));
            Fraction f = hj_evaluate(c);
            if (fmt() == Format::json) out << json{{"fraction", js::encode(f)}, {"chain", js::encode(c)}}.dump() << "\n";
            else if (fmt() == Format::dot) no_dot("hj eval");
            else out << f.str() << "\n";
        };
    });
    s = leaf(hj, "dual", "Dual fraction N/(N-A)");
    s->add_option("N", args.n)->required();
    s->add_option("A", args.a)->required();
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            auto [f, c] = hj_dual(Fraction(number(args.n), number(args.a)));
            if (fmt() == Format::json) out << json{{"fraction", js::encode(f)}, {"chain", js::encode(c)}}.dump() << "\n";
            else if (fmt() == Format::dot) out << to_dot(Chain(c));
            else out << f.str() << " " << c.str() << "\n";
        };
    });

    CLI::App* wahl = group("wahl", "Wahl singularities");
    s = leaf(wahl, "chain", "Resolution chain of 1/M^2(1,MA-1)");
    s->add_option("M", args.n)->required();
    s->add_option("A", args.a)->required();
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            WahlPair w(number(args.n), number(args.a));
            if (w.is_smooth()) throw DomainError("(1,1) is a smooth point and has no resolution chain");
            if (fmt() == Format::json) out << json{{"wahl", js::encode(w)}, {"chain", js::encode(wahl_chain(w))}}.dump() << "\n";
            else if (fmt() == Format::dot) out << dot_of_wahl(w, "wahl");
            else out << wahl_chain(w).str() << "\n";
        };
    });
    s = leaf(wahl, "recognize", "Wahl pair with the given chain, if any");
    s->add_option("E", args.list, "Comma-separated entries")->required();
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            CFrac c(number_list(args.list));
            auto w = recognize_wahl(c);
            if (fmt() == Format::json) {
                out << json{{"chain", js::encode(c)}, {"wahl", w ? js::encode(*w) : json(nullptr)}}.dump() << "\n";
            } else if (fmt() == Format::dot) {
                out << to_dot(Chain(c), std::vector<bool>(c.size(), w.has_value()), "chain");
            } else {
                out << (w ? w->str() : std::string("not a Wahl chain")) << "\n";
            }
        };
    });

    CLI::App* mori = group("mori", "Extremal neighborhoods and Mori sequences");
    auto four = [&args](CLI::App* c) {
        c->add_option("M1", args.m1)->required();
        c->add_option("A1", args.a1)->required();
        c->add_option("M2", args.m2)->required();
        c->add_option("A2", args.a2)->required();
    };
    auto nbhd = [&args] {
        return ExtremalNbhd::member(WahlPair(number(args.m1), number(args.a1)),
                                    WahlPair(number(args.m2), number(args.a2)));
    };
    s = leaf(mori, "seq", "Mori sequence of an initial neighborhood");
    four(s);
    s->add_option("--count", args.count, "Number of members");
    s->callback([&, fmt, nbhd] {
        action = [&, fmt, nbhd](std::ostream& out) {
            ExtremalNbhd e = nbhd();
            auto steps = mori_sequence(e, count_of(args.count));
            if (fmt() == Format::json) {
                json members = json::array();
                for (const auto& st : steps) {
                    json j = js::encode(st.nbhd);
                    j["i"] = st.index;
                    members.push_back(std::move(j));
                }
                out << json{{"delta", js::encode(e.delta())}, {"infinite", e.delta() >= 2}, {"members", members}}.dump(2)
                    << "\n";
            } else if (fmt() == Format::dot) {
                for (const auto& st : steps) out << dot_of(resolution_chain(st.nbhd), "E" + std::to_string(st.index));
            } else {
                out << "delta " << e.delta().str() << ", " << kind_name(classify(e)) << ", "
                    << (e.delta() >= 2 ? "infinite" : "finite") << "\n";
                for (const auto& st : steps) out << member_line(st) << "\n";
            }
        };
    });
    s = leaf(mori, "flip", "Extremal P-resolution of a flipping neighborhood");
    four(s);
    s->callback([&, fmt, nbhd] {
        action = [&, fmt, nbhd](std::ostream& out) {
            PResolution p = flip(nbhd());
            Fraction q = presolution_target(p);
            if (fmt() == Format::json) {
                json j = js::encode(p);
                j["target"] = js::encode(q);
                out << j.dump(2) << "\n";
            } else if (fmt() == Format::dot) {
                out << dot_of(resolution_chain(p), "flip");
            } else {
                out << display(p) << "\n" << "delta " << p.delta().str() << ", Q " << q.str() << "\n";
            }
        };
    });
    s = leaf(mori, "initials", "Initial flipping neighborhoods over [M,A]-C");
    s->add_option("--wahl", args.wahl, "Wahl pair M A")->expected(2)->required();
    s->add_option("--curve", args.curve, "Self-intersection magnitude of the central curve")->required();
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            PResolution p(WahlPair::smooth(), wahl_option(args.wahl), number(args.curve));
            auto list = initial_neighborhoods(p);
            if (fmt() == Format::json) {
                json j = json::array();
                for (const auto& e : list) j.push_back(js::encode(e));
                out << json{{"presolution", js::encode(p)}, {"initials", j}}.dump(2) << "\n";
            } else if (fmt() == Format::dot) {
                std::size_t i = 0;
                for (const auto& e : list) out << dot_of(resolution_chain(e), "F" + std::to_string(++i));
            } else {
                out << display_compact(p) << ", delta " << p.delta().str() << "\n";
                for (const auto& e : list) out << e.w1().str() << "," << e.w2().str() << " " << display(e) << "\n";
            }
        };
    });

    CLI::App* embed = group("embed", "Embedded rational homology balls");
    s = leaf(embed, "linear", "Balls in the plumbing of a linear chain");
    s->add_option("E", args.list, "Comma-separated entries")->required();
    s->add_option("--count", args.count, "Number of Mori steps");
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            print_report(embed_linear(CFrac(number_list(args.list)), count_of(args.count)), fmt(), out);
        };
    });
    s = leaf(embed, "blowup", "Balls in B_{N,A} blown up once");
    s->add_option("N", args.n)->required();
    s->add_option("A", args.a)->required();
    s->add_option("--count", args.count, "Number of Mori steps");
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            print_report(embed_blowup(WahlPair(number(args.n), number(args.a)), count_of(args.count)), fmt(), out);
        };
    });
    s = leaf(embed, "milnor", "Balls in the Milnor fiber of [M,A]-C");
    s->add_option("--wahl", args.wahl, "Wahl pair M A")->expected(2)->required();
    s->add_option("--curve", args.curve, "Self-intersection magnitude of the central curve")->required();
    s->add_option("--count", args.count, "Number of Mori steps per family");
    s->callback([&, fmt] {
        action = [&, fmt](std::ostream& out) {
            print_report(embed_milnor(wahl_option(args.wahl), number(args.curve), count_of(args.count)), fmt(), out);
        };
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continued fractions, Wahl chains, Mori sequences and embedded rational homology balls", "antiflip"};
    Args args;
    std::string format = "text";
    std::function<void(std::ostream&)> action;
    build(app, args, format, action);

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    // Render into a buffer so a failing command prints nothing on stdout.
    std::ostringstream buffer;
    try {
        action(buffer);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    out << buffer.str();
    return 0;
}

}  // namespace antiflip
