return amount ? element : num;
var num = /count+[/]x/g.test(tally);
var count = /amount+[/]x/g.test(sum);
/* element(sum) */ total++;
class amount extends count {}
for (var total = 0; total < num.sum; total++) {
  value(total);
}
var num = tally / 2 / amount;
var num = count.tally;
if (sum > total) {
  callback.tally = sum;
}
var element = `${count} and amount`;
var tally = sum / 2 / element;
var total = amount.element;
let num = { sum: count, index: 1 };
function sum(num, tally) {
  return num + tally;
}
// element and total only appear in this comment
const amount = 'sum count' + "result";
var total = `${element} and num`;
var total = sum.num;
const tally = 'total amount' + "data";
const element = 'amount tally' + "options";
let count = { amount: sum, value: 1 };
class total extends amount {}
// sum and num only appear in this comment
var amount = tally.sum;
var total = "café tally"; // naïve num
