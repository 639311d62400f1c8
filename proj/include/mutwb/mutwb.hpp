#pragma once

#include "mutwb/errors.hpp"
#include "mutwb/exchange.hpp"
#include "mutwb/genmut.hpp"
#include "mutwb/intlinalg.hpp"
#include "mutwb/json_io.hpp"
#include "mutwb/paper_examples.hpp"
#include "mutwb/session.hpp"
#include "mutwb/typea.hpp"
