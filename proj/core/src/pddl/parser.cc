#include "lhplan/pddl/parser.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

using namespace std;

namespace lhplan::pddl {

string format_atom(const Atom &atom) {
    string out = "(" + atom.predicate;
    for (const string &arg : atom.args)
        out += " " + arg;
    out += ")";
    return out;
}

bool DomainAst::has_type(const string &type_name) const {
    if (type_name == "object")
        return true;
    for (const TypedName &t : types)
        if (t.name == type_name)
            return true;
    return false;
}

const PredicateDecl *DomainAst::find_predicate(const string &pred_name) const {
    for (const PredicateDecl &p : predicates)
        if (p.name == pred_name)
            return &p;
    return nullptr;
}

namespace {

enum class TokenKind { LeftParen, RightParen, Symbol, End };

struct Token {
    TokenKind kind;
    string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const string &text) {
        int line = 1;
        int column = 1;
        size_t i = 0;
        auto advance = [&](char c) {
            if (c == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        };
        while (i < text.size()) {
            char c = text[i];
            if (c == ';') {
                while (i < text.size() && text[i] != '\n') {
                    advance(text[i]);
                    ++i;
                }
                continue;
            }
            if (isspace(static_cast<unsigned char>(c))) {
                advance(c);
                ++i;
                continue;
            }
            if (c == '(') {
                tokens.push_back({TokenKind::LeftParen, "(", line, column});
                advance(c);
                ++i;
                continue;
            }
            if (c == ')') {
                tokens.push_back({TokenKind::RightParen, ")", line, column});
                advance(c);
                ++i;
                continue;
            }
            int start_line = line;
            int start_column = column;
            string symbol;
            while (i < text.size()) {
                char s = text[i];
                if (s == '(' || s == ')' || s == ';' ||
                    isspace(static_cast<unsigned char>(s)))
                    break;
                symbol += static_cast<char>(tolower(static_cast<unsigned char>(s)));
                advance(s);
                ++i;
            }
            tokens.push_back({TokenKind::Symbol, symbol, start_line, start_column});
        }
        tokens.push_back({TokenKind::End, "", line, column});
    }

    vector<Token> tokens;
};

enum class ConditionContext { Precondition, Goal, Init, Effect };

bool is_variable(const string &name) {
    return !name.empty() && name[0] == '?';
}

bool is_nonneg_integer(const string &text) {
    if (text.empty())
        return false;
    return all_of(text.begin(), text.end(),
                  [](char c) { return isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
public:
    explicit Parser(const string &text) : lexer_(text), pos_(0) {}

    DomainAst parse_domain() {
        DomainAst domain;
        expect_left();
        expect_keyword("define");
        expect_left();
        expect_keyword("domain");
        domain.name = expect_symbol("domain name");
        expect_right();

        bool saw_requirements = false;
        while (peek().kind == TokenKind::LeftParen) {
            Token open = next();
            Token section = next();
            if (section.kind != TokenKind::Symbol)
                fail(section, "expected section name");
            if (section.text == ":requirements") {
                saw_requirements = true;
                parse_requirements(domain);
            } else if (section.text == ":types") {
                domain.types = parse_typed_list(true);
            } else if (section.text == ":predicates") {
                parse_predicates(domain);
            } else if (section.text == ":functions") {
                parse_functions(open);
            } else if (section.text == ":action") {
                domain.actions.push_back(parse_action(open));
            } else {
                fail(section, "unsupported section '" + section.text + "'");
            }
        }
        expect_right();
        expect_end();

        (void)saw_requirements;
        validate_domain(domain);
        return domain;
    }

    ProblemAst parse_problem() {
        ProblemAst problem;
        expect_left();
        expect_keyword("define");
        expect_left();
        expect_keyword("problem");
        problem.name = expect_symbol("problem name");
        expect_right();

        while (peek().kind == TokenKind::LeftParen) {
            next();
            Token section = next();
            if (section.kind != TokenKind::Symbol)
                fail(section, "expected section name");
            if (section.text == ":domain") {
                problem.domain_name = expect_symbol("domain name");
                expect_right();
            } else if (section.text == ":objects") {
                problem.objects = parse_typed_list(false);
            } else if (section.text == ":init") {
                parse_init(problem);
            } else if (section.text == ":goal") {
                problem.goal = parse_condition(ConditionContext::Goal, nullptr);
            } else if (section.text == ":metric") {
                parse_metric(section);
            } else {
                fail(section, "unsupported section '" + section.text + "'");
            }
        }
        expect_right();
        expect_end();

        validate_problem(problem);
        return problem;
    }

private:
    Lexer lexer_;
    size_t pos_;

    const Token &peek(size_t ahead = 0) const {
        size_t i = min(pos_ + ahead, lexer_.tokens.size() - 1);
        return lexer_.tokens[i];
    }

    Token next() {
        const Token &t = peek();
        if (t.kind != TokenKind::End)
            ++pos_;
        return t;
    }

    [[noreturn]] void fail(const Token &at, const string &message) const {
        throw ParseError(at.line, at.column, message);
    }

    void expect_left() {
        Token t = next();
        if (t.kind != TokenKind::LeftParen)
            fail(t, "expected '('");
    }

    void expect_right() {
        Token t = next();
        if (t.kind != TokenKind::RightParen)
            fail(t, "expected ')'");
    }

    void expect_end() {
        Token t = next();
        if (t.kind != TokenKind::End)
            fail(t, "trailing input after closing ')'");
    }

    void expect_keyword(const string &word) {
        Token t = next();
        if (t.kind != TokenKind::Symbol || t.text != word)
            fail(t, "expected '" + word + "'");
    }

    string expect_symbol(const string &what) {
        Token t = next();
        if (t.kind != TokenKind::Symbol)
            fail(t, "expected " + what);
        return t.text;
    }

    void parse_requirements(DomainAst &domain) {
        while (peek().kind == TokenKind::Symbol) {
            Token req = next();
            if (req.text == ":strips" || req.text == ":typing") {
                // accepted
            } else if (req.text == ":action-costs") {
                domain.uses_action_costs = true;
            } else {
                fail(req, "unsupported requirement '" + req.text + "'");
            }
        }
        expect_right();
    }

    //  name... [- type] name... [- type] ...  up to the closing paren.
    //  Untyped trailing names default to "object".
    vector<TypedName> parse_typed_list(bool allow_any_name) {
        vector<TypedName> result;
        vector<Token> pending;
        while (true) {
            Token t = peek();
            if (t.kind == TokenKind::RightParen) {
                next();
                break;
            }
            if (t.kind == TokenKind::LeftParen) {
                Token inner = peek(1);
                if (inner.kind == TokenKind::Symbol && inner.text == "either")
                    fail(t, "either types are not supported");
                fail(t, "expected name");
            }
            if (t.kind == TokenKind::End)
                fail(t, "unexpected end of input in typed list");
            next();
            if (t.text == "-") {
                if (pending.empty())
                    fail(t, "type with no names before '-'");
                Token type_token = next();
                if (type_token.kind == TokenKind::LeftParen) {
                    Token inner = peek();
                    if (inner.kind == TokenKind::Symbol && inner.text == "either")
                        fail(type_token, "either types are not supported");
                    fail(type_token, "expected type name");
                }
                if (type_token.kind != TokenKind::Symbol)
                    fail(type_token, "expected type name");
                for (const Token &name : pending)
                    result.push_back({name.text, type_token.text});
                pending.clear();
            } else {
                pending.push_back(t);
            }
        }
        for (const Token &name : pending)
            result.push_back({name.text, "object"});
        (void)allow_any_name;
        return result;
    }

    void parse_predicates(DomainAst &domain) {
        while (peek().kind == TokenKind::LeftParen) {
            Token open = next();
            PredicateDecl decl;
            decl.name = expect_symbol("predicate name");
            decl.params = parse_typed_list(false);
            for (const TypedName &p : decl.params)
                if (!is_variable(p.name))
                    fail(open, "predicate parameters must be variables");
            domain.predicates.push_back(decl);
        }
        expect_right();
    }

    // Only (total-cost), optionally typed "- number", is allowed.
    void parse_functions(const Token &section) {
        while (peek().kind == TokenKind::LeftParen) {
            next();
            Token name = next();
            if (name.kind != TokenKind::Symbol || name.text != "total-cost")
                fail(name, "unsupported function (only total-cost is allowed)");
            expect_right();
            if (peek().kind == TokenKind::Symbol && peek().text == "-") {
                next();
                Token type_token = next();
                if (type_token.kind != TokenKind::Symbol || type_token.text != "number")
                    fail(type_token, "functions must have type number");
            }
        }
        expect_right();
        (void)section;
    }

    ActionSchema parse_action(const Token &open) {
        ActionSchema action;
        action.name = expect_symbol("action name");
        bool saw_cost = false;
        while (peek().kind == TokenKind::Symbol) {
            Token key = next();
            if (key.text == ":parameters") {
                expect_left();
                action.params = parse_typed_list(false);
                for (const TypedName &p : action.params)
                    if (!is_variable(p.name))
                        fail(key, "action parameters must be variables");
            } else if (key.text == ":precondition") {
                action.pre = parse_condition(ConditionContext::Precondition, nullptr);
            } else if (key.text == ":effect") {
                EffectLists effects;
                parse_condition(ConditionContext::Effect, &effects);
                action.add = effects.add;
                action.del = effects.del;
                if (effects.cost) {
                    if (saw_cost)
                        fail(key, "duplicate cost effect");
                    saw_cost = true;
                    action.cost = *effects.cost;
                    cost_effect_tokens_.push_back(key);
                }
            } else {
                fail(key, "unsupported action keyword '" + key.text + "'");
            }
        }
        expect_right();
        (void)open;
        return action;
    }

    struct EffectLists {
        vector<Atom> add;
        vector<Atom> del;
        optional<long long> cost;
    };

    // A condition is a single item or (and item*); "and" nests.
    // Returns the positive atoms; negations go to effects->del in effect
    // context and are diagnostics everywhere else.
    vector<Atom> parse_condition(ConditionContext context, EffectLists *effects) {
        vector<Atom> positives;
        parse_condition_item(context, effects, positives, false);
        if (effects)
            effects->add = positives;
        return positives;
    }

    void parse_condition_item(ConditionContext context, EffectLists *effects,
                              vector<Atom> &positives, bool negated) {
        Token t = peek();
        if (t.kind == TokenKind::Symbol) {
            // Inline form: name(args) or a bare 0-ary atom.
            next();
            Atom atom;
            atom.predicate = t.text;
            if (peek().kind == TokenKind::LeftParen) {
                next();
                atom.args = parse_argument_list();
            }
            record_atom(context, effects, positives, atom, negated, t);
            return;
        }
        if (t.kind != TokenKind::LeftParen)
            fail(t, "expected condition");
        next();
        Token head = peek();
        if (head.kind == TokenKind::RightParen) {
            // "(and)" handled below; "()" is an empty conjunction too.
            next();
            return;
        }
        if (head.kind != TokenKind::Symbol)
            fail(head, "expected predicate or connective");
        if (head.text == "and") {
            next();
            if (negated)
                fail(head, "negated conjunctions are not supported");
            while (peek().kind != TokenKind::RightParen) {
                if (peek().kind == TokenKind::End)
                    fail(peek(), "unexpected end of input in conjunction");
                parse_condition_item(context, effects, positives, false);
            }
            next();
            return;
        }
        if (head.text == "not") {
            next();
            if (negated)
                fail(head, "double negation is not supported");
            parse_condition_item(context, effects, positives, true);
            expect_right();
            return;
        }
        if (head.text == "increase") {
            next();
            if (context != ConditionContext::Effect || negated)
                fail(head, "increase is only allowed in effects");
            expect_left();
            expect_keyword("total-cost");
            expect_right();
            Token amount = next();
            if (amount.kind != TokenKind::Symbol || !is_nonneg_integer(amount.text))
                fail(amount, "cost must be a nonnegative integer");
            if (effects->cost)
                fail(head, "duplicate cost effect");
            effects->cost = stoll(amount.text);
            expect_right();
            return;
        }
        if (head.text == "=") {
            next();
            if (context != ConditionContext::Init || negated)
                fail(head, "'=' is only allowed in :init");
            expect_left();
            Token fluent = next();
            if (fluent.kind != TokenKind::Symbol || fluent.text != "total-cost")
                fail(fluent, "unsupported numeric fluent (only total-cost is allowed)");
            expect_right();
            Token value = next();
            if (value.kind != TokenKind::Symbol || value.text != "0")
                fail(value, "total-cost must be initialized to 0");
            expect_right();
            saw_total_cost_init_ = true;
            return;
        }
        // Standard atom: (name arg*).
        next();
        Atom atom;
        atom.predicate = head.text;
        atom.args = parse_argument_list();
        record_atom(context, effects, positives, atom, negated, head);
    }

    vector<string> parse_argument_list() {
        vector<string> args;
        while (true) {
            Token t = next();
            if (t.kind == TokenKind::RightParen)
                return args;
            if (t.kind != TokenKind::Symbol)
                fail(t, "expected argument");
            args.push_back(t.text);
        }
    }

    void record_atom(ConditionContext context, EffectLists *effects,
                     vector<Atom> &positives, const Atom &atom, bool negated,
                     const Token &at) {
        if (negated) {
            switch (context) {
            case ConditionContext::Precondition:
                fail(at, "negative preconditions unsupported");
            case ConditionContext::Goal:
                fail(at, "negative goals unsupported");
            case ConditionContext::Init:
                fail(at, "negative init literals unsupported");
            case ConditionContext::Effect:
                effects->del.push_back(atom);
                return;
            }
        }
        positives.push_back(atom);
    }

    void parse_init(ProblemAst &problem) {
        saw_total_cost_init_ = false;
        vector<Atom> atoms;
        while (peek().kind != TokenKind::RightParen) {
            if (peek().kind == TokenKind::End)
                fail(peek(), "unexpected end of input in :init");
            parse_condition_item(ConditionContext::Init, nullptr, atoms, false);
        }
        next();
        problem.has_total_cost_init = saw_total_cost_init_;
        // Collapse duplicates, keeping first occurrences in order.
        for (const Atom &atom : atoms)
            if (find(problem.init.begin(), problem.init.end(), atom) ==
                problem.init.end())
                problem.init.push_back(atom);
    }

    void parse_metric(const Token &section) {
        Token kind = next();
        if (kind.kind != TokenKind::Symbol || kind.text != "minimize")
            fail(kind, "unsupported metric");
        expect_left();
        expect_keyword("total-cost");
        expect_right();
        expect_right();
        (void)section;
    }

    // --- semantic validation ---

    void validate_domain(const DomainAst &domain) {
        map<string, string> parent_of;
        validate_types(domain, parent_of);

        set<string> predicate_names;
        for (const PredicateDecl &p : domain.predicates) {
            if (!predicate_names.insert(p.name).second)
                fail(lexer_.tokens.front(), "duplicate predicate '" + p.name + "'");
            for (const TypedName &param : p.params)
                if (!parent_of.count(param.type))
                    fail(lexer_.tokens.front(),
                         "unknown type '" + param.type + "' in predicate '" +
                             p.name + "'");
        }

        set<string> action_names;
        for (const ActionSchema &action : domain.actions) {
            if (!action_names.insert(action.name).second)
                fail(lexer_.tokens.front(), "duplicate action '" + action.name + "'");
            validate_action(domain, action, parent_of);
        }

        if (!domain.uses_action_costs) {
            for (const Token &t : cost_effect_tokens_)
                fail(t, "(increase (total-cost) ...) requires the :action-costs "
                        "requirement");
        }
    }

    void validate_types(const DomainAst &domain, map<string, string> &parent_of) {
        parent_of["object"] = "";
        for (const TypedName &t : domain.types) {
            if (t.name == "object")
                fail(lexer_.tokens.front(), "type 'object' cannot be redeclared");
            parent_of[t.name] = t.type;
        }
        // Parents that are only mentioned become children of object.
        for (const TypedName &t : domain.types)
            if (!parent_of.count(t.type))
                parent_of[t.type] = "object";
        // Reject cycles by walking each chain with a step bound.
        for (const auto &[type_name, _] : parent_of) {
            string current = type_name;
            size_t steps = 0;
            while (current != "object" && !current.empty()) {
                auto it = parent_of.find(current);
                if (it == parent_of.end())
                    break;
                current = it->second;
                if (++steps > parent_of.size())
                    fail(lexer_.tokens.front(),
                         "cyclic type hierarchy involving '" + type_name + "'");
            }
        }
    }

    static bool subtype_of(const map<string, string> &parent_of, string type,
                           const string &ancestor) {
        while (true) {
            if (type == ancestor)
                return true;
            auto it = parent_of.find(type);
            if (it == parent_of.end() || it->second.empty())
                return false;
            type = it->second;
        }
    }

    void validate_action(const DomainAst &domain, const ActionSchema &action,
                         const map<string, string> &parent_of) {
        map<string, string> param_types;
        for (const TypedName &p : action.params) {
            if (param_types.count(p.name))
                fail(lexer_.tokens.front(), "duplicate parameter '" + p.name +
                                                "' in action '" + action.name + "'");
            if (!parent_of.count(p.type))
                fail(lexer_.tokens.front(), "unknown type '" + p.type +
                                                "' in action '" + action.name + "'");
            param_types[p.name] = p.type;
        }
        auto check_atoms = [&](const vector<Atom> &atoms, const char *where) {
            for (const Atom &atom : atoms) {
                const PredicateDecl *decl = domain.find_predicate(atom.predicate);
                if (!decl)
                    fail(lexer_.tokens.front(),
                         "unknown predicate '" + atom.predicate + "' in " + where +
                             " of action '" + action.name + "'");
                if (decl->params.size() != atom.args.size())
                    fail(lexer_.tokens.front(),
                         "arity mismatch for predicate '" + atom.predicate +
                             "': expected " + to_string(decl->params.size()) +
                             ", got " + to_string(atom.args.size()));
                for (size_t i = 0; i < atom.args.size(); ++i) {
                    const string &arg = atom.args[i];
                    if (is_variable(arg)) {
                        auto it = param_types.find(arg);
                        if (it == param_types.end())
                            fail(lexer_.tokens.front(),
                                 "variable '" + arg + "' in action '" + action.name +
                                     "' is not declared in :parameters");
                        const string &declared = decl->params[i].type;
                        if (!subtype_of(parent_of, it->second, declared) &&
                            !subtype_of(parent_of, declared, it->second))
                            fail(lexer_.tokens.front(),
                                 "type mismatch: '" + arg + "' of type '" +
                                     it->second + "' used where '" + declared +
                                     "' is expected");
                    }
                    // Constants are validated against the problem objects
                    // when grounding.
                }
            }
        };
        check_atoms(action.pre, "precondition");
        check_atoms(action.add, "effect");
        check_atoms(action.del, "effect");

        for (const Atom &added : action.add)
            if (find(action.del.begin(), action.del.end(), added) != action.del.end())
                fail(lexer_.tokens.front(),
                     "literal " + format_atom(added) + " is both added and deleted "
                     "by action '" + action.name + "'");
    }

    void validate_problem(const ProblemAst &problem) {
        set<string> object_names;
        for (const TypedName &obj : problem.objects) {
            if (!object_names.insert(obj.name).second)
                fail(lexer_.tokens.front(), "duplicate object '" + obj.name + "'");
        }
        auto check_ground = [&](const vector<Atom> &atoms, const char *where) {
            for (const Atom &atom : atoms)
                for (const string &arg : atom.args) {
                    if (is_variable(arg))
                        fail(lexer_.tokens.front(), string("variables are not "
                                                           "allowed in ") + where);
                    if (!object_names.count(arg))
                        fail(lexer_.tokens.front(),
                             "undeclared object '" + arg + "' in " + where);
                }
        };
        check_ground(problem.init, ":init");
        check_ground(problem.goal, ":goal");
    }

    bool saw_total_cost_init_ = false;
    vector<Token> cost_effect_tokens_;
};

}  // namespace

DomainAst parse_domain(const string &text) {
    Parser parser(text);
    return parser.parse_domain();
}

ProblemAst parse_problem(const string &text) {
    Parser parser(text);
    return parser.parse_problem();
}

string read_text_file(const string &path) {
    ifstream in(path, ios::binary);
    if (!in)
        throw runtime_error("cannot read file '" + path + "'");
    ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DomainAst parse_domain_file(const string &path) {
    return parse_domain(read_text_file(path));
}

ProblemAst parse_problem_file(const string &path) {
    return parse_problem(read_text_file(path));
}

}
