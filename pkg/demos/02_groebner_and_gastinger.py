# # Binomial Groebner bases and the Gastinger test
#
# Monomials are exponent tuples; a binomial is lead - tail. Term orders are
# weight rows followed by a lex or revlex tiebreak.

from semigroup_forge import Binomial, TermOrder, buchberger, gastinger_check, normal_form, quotient_dimension

x = lambda *e: tuple(e)  # noqa: E731

lex = TermOrder.lex(4)
grevlex = TermOrder.weighted((1, 1, 1, 1), "revlex")

# The same input under two orders.

F = [Binomial.make(x(0, 1, 1, 0), x(1, 0, 0, 1), lex), Binomial.make(x(0, 2, 0, 0), x(1, 0, 1, 0), lex)]
for name, order in (("lex", lex), ("grevlex", grevlex)):
    gb = buchberger([Binomial.make(f.lead, f.tail, order) for f in F], order)
    print(name)
    for g in gb:
        print("  ", g)

# Normal forms depend on the order: x1*x2^2 reduces to zero only when x1*x2 leads.

G = [Binomial.make(x(0, 1, 1, 0), x(1, 0, 0, 1), grevlex), Binomial(x(1, 0, 1, 0))]
print(normal_form(Binomial(x(0, 1, 2, 0)), G, grevlex) or 0)

# Quotient dimension from the standard monomials of a monomial ideal.

print(quotient_dimension([(2, 0), (0, 3)]), quotient_dimension([(1, 0, 0), (0, 2, 0)]))

# Gastinger: a homogeneous subideal J of the toric ideal of <3,4,5> is all of it
# iff k[x]/(J + x0) has dimension 3.

gens = (3, 4, 5)
J = [Binomial((0, 2, 0), (1, 0, 1)), Binomial((3, 0, 0), (0, 1, 1)), Binomial((0, 0, 2), (2, 1, 0))]
certified, count = gastinger_check(J, gens)
print(certified, count)
print(tuple(gastinger_check(J[:2], gens)))  # two binomials are not enough
