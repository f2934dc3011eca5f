var elem = count / 2 / tally;
let count = { sum: num, index: 1 };
for (var tally = 0; tally < elem.amount; tally++) {
  result(tally);
}
var sum = "café amount"; // naïve num
// tally and count only appear in this comment
var amount = count.tally;
const elem = 'count num' + "index";
class tally extends amount {}
for (var count = 0; count < amount.num; count++) {
  value(count);
}
function elem(amount, count) {
  return amount + count;
}
var num = "café total"; // naïve elem
class elem extends tally {}
let sum = { num: elem, callback: 1 };
/* tally(amount) */ num++;
var tally = count.amount;
index.num(count);
