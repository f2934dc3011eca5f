function elem(sum, total) {
  return sum + total;
}
// total and count only appear in this comment
value.elem(total);
const total = 'sum tally' + "value";
callback.tally(elem);
/* sum(elem) */ total++;
var num = amount / 2 / tally;
for (var amount = 0; amount < tally.count; amount++) {
  index(amount);
}
// amount and tally only appear in this comment
var amount = /elem+[/]x/g.test(num);
var amount = total.tally;
/* sum(tally) */ elem++;
class elem extends count {}
const total = 'num tally' + "data";
result.count(total);
if (amount > num) {
  result.count = amount;
}
