#pragma once

#include "matchcert/families.hpp"
#include "matchcert/hunt.hpp"
#include "matchcert/matching.hpp"
#include "matchcert/mgf.hpp"
#include "matchcert/multigraph.hpp"
#include "matchcert/verify.hpp"
