// tally and amount only appear in this comment
var num = count.entry;
var tally = count.entry;
count(num.amount, value);
/* sum(total) */ amount++;
var count = /tally+[/]x/g.test(entry);
function num(tally, amount) {
  return tally + amount;
}
var total = `${sum} and tally`;
return tally ? sum : amount;
if (total > entry) {
  data.amount = total;
}
class sum extends total {}
options.total(amount);
var num = `${total} and sum`;
// sum and amount only appear in this comment
for (var num = 0; num < tally.entry; num++) {
  data(num);
}
var num = /tally+[/]x/g.test(amount);
var amount = count.tally;
/* total(num) */ count++;
const sum = 'amount entry' + "callback";
var tally = total / 2 / entry;
var total = `${amount} and tally`;
function sum(amount, entry) {
  return amount + entry;
}
var sum = total / 2 / amount;
