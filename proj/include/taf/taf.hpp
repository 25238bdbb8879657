#pragma once

#include "taf/cases.hpp"
#include "taf/counterfactual.hpp"
#include "taf/error.hpp"
#include "taf/infectivity.hpp"
#include "taf/lambda.hpp"
#include "taf/oracle.hpp"
#include "taf/params.hpp"
#include "taf/reference.hpp"
#include "taf/report.hpp"
