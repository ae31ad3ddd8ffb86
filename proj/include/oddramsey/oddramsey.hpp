#pragma once

#include "oddramsey/agreement.hpp"
#include "oddramsey/constructions.hpp"
#include "oddramsey/cycle.hpp"
#include "oddramsey/dirac.hpp"
#include "oddramsey/error.hpp"
#include "oddramsey/even_cycle.hpp"
#include "oddramsey/gf2.hpp"
#include "oddramsey/graph.hpp"
#include "oddramsey/io.hpp"
#include "oddramsey/oracle.hpp"
#include "oddramsey/parity.hpp"
#include "oddramsey/random.hpp"
#include "oddramsey/spicy.hpp"
#include "oddramsey/structure.hpp"
#include "oddramsey/switch.hpp"
